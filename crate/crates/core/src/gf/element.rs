use std::fmt;
use std::sync::Arc;

use super::{FieldError, FieldSpec, Gf};

/// An element of a specific [`FieldSpec`]. Arithmetic between elements of
/// different fields is an error.
#[derive(Clone)]
pub struct FieldElement {
    field: Arc<FieldSpec>,
    value: Gf,
}

impl FieldElement {
    pub fn from_raw(field: Arc<FieldSpec>, value: Gf) -> Self {
        FieldElement { field, value }
    }

    pub fn zero(field: &Arc<FieldSpec>) -> Self {
        Self::from_raw(field.clone(), Gf::ZERO)
    }

    pub fn one(field: &Arc<FieldSpec>) -> Self {
        Self::from_raw(field.clone(), Gf::ONE)
    }

    /// Element with the given polynomial-basis coefficients (low to high).
    pub fn from_coeffs(field: &Arc<FieldSpec>, coeffs: &[u32]) -> Self {
        Self::from_raw(field.clone(), field.from_coeffs(coeffs))
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn raw(&self) -> Gf {
        self.value
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn check(&self, other: &FieldElement) -> Result<(), FieldError> {
        if Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch(
                self.field.label().to_string(),
                other.field.label().to_string(),
            ))
        }
    }

    fn with(&self, value: Gf) -> Self {
        Self::from_raw(self.field.clone(), value)
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn neg(&self) -> FieldElement {
        self.with(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        self.field.inv(self.value).map(|v| self.with(v)).ok_or(FieldError::DivisionByZero)
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.with(self.field.pow(self.value, e))
    }

    /// `x^q` for a power `q` of the characteristic.
    pub fn frobenius(&self, q: u64) -> Result<FieldElement, FieldError> {
        if q == 0 || !self.field.is_char_power(q) {
            return Err(FieldError::BadPower { q, p: self.field.characteristic() });
        }
        Ok(self.pow(q))
    }

    /// Multiplicative order; `None` for zero.
    pub fn multiplicative_order(&self) -> Option<u64> {
        let e = self.field.log_of(self.value)? as u64;
        let n = self.field.order() - 1;
        Some(n / num_integer::gcd(n, e))
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && *self.field == *other.field
    }
}

impl Eq for FieldElement {}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field.format(self.value), self.field.label())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format(self.value))
    }
}
