use std::fmt;

use super::Field;
use crate::error::{Error, Result};

/// A field element bundled with its field, for callers that want checked
/// mixing. Internal code works on raw codes through [`Field`] directly.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: u32,
}

impl FieldElement {
    pub fn new(field: &Field, value: u32) -> FieldElement {
        let value = (value as u64 % field.order()) as u32;
        FieldElement {
            field: field.clone(),
            value,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn lift(&self, other: &FieldElement, op: impl Fn(&Field, u32, u32) -> u32) -> Result<FieldElement> {
        if self.field != other.field {
            return Err(Error::MixedFields);
        }
        Ok(FieldElement {
            field: self.field.clone(),
            value: op(&self.field, self.value, other.value),
        })
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.lift(other, Field::add)
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.lift(other, Field::sub)
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.lift(other, Field::mul)
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.mul(&other.inv()?)
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            value: self.field.neg(self.value),
        }
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(FieldElement {
            field: self.field.clone(),
            value: self.field.inv(self.value)?,
        })
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            value: self.field.pow(self.value, e),
        }
    }

    pub fn frobenius(&self, k: u64) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            value: self.field.frobenius(self.value, k),
        }
    }

    pub fn order(&self) -> Result<u64> {
        self.field.element_order(self.value)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format_element(self.value))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{:?}", self.field.format_element(self.value), self.field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixing_fields_is_an_error() {
        let a = Field::new(2, 2).unwrap().element(2);
        let b = Field::new(3, 1).unwrap().element(2);
        assert_eq!(a.add(&b).unwrap_err(), Error::MixedFields);
        assert_eq!(a.mul(&a.inv().unwrap()).unwrap().value(), 1);
        assert_eq!(a.field().element(0).inv().unwrap_err(), Error::InverseOfZero);
    }
}
