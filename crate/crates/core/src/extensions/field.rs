//! Base fields, described only by the two properties the criteria consume.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
#[derive(Default)]
pub enum FieldKind {
    #[serde(rename = "Q")]
    #[default]
    RationalsQ,
    /// A finite extension of kappa(X), kappa algebraically closed of characteristic 0.
    #[serde(rename = "function_field")]
    FunctionFieldOverAlgClosedChar0,
    AbstractHilbertian {
        #[serde(default)]
        infinite_prime_divisors: bool,
    },
    /// Quotient field of a Dedekind domain; both flags are the user's assertion.
    AbstractDedekindFraction {
        hilbertian: bool,
        infinite_prime_divisors: bool,
    },
}


impl FieldKind {
    pub fn hilbertian(&self) -> bool {
        match self {
            FieldKind::RationalsQ
            | FieldKind::FunctionFieldOverAlgClosedChar0
            | FieldKind::AbstractHilbertian { .. } => true,
            FieldKind::AbstractDedekindFraction { hilbertian, .. } => *hilbertian,
        }
    }

    /// Every nonconstant polynomial has infinitely many prime divisors.
    /// Over Q this is Chebotarev; over kappa(X) every point of kappa is one.
    pub fn infinite_prime_divisors(&self) -> bool {
        match self {
            FieldKind::RationalsQ | FieldKind::FunctionFieldOverAlgClosedChar0 => true,
            FieldKind::AbstractHilbertian { infinite_prime_divisors }
            | FieldKind::AbstractDedekindFraction { infinite_prime_divisors, .. } => {
                *infinite_prime_divisors
            }
        }
    }

    pub fn is_number_field(&self) -> bool {
        matches!(self, FieldKind::RationalsQ)
    }

    /// The fields over which the third inertia criterion applies.
    pub fn number_or_function_field(&self) -> bool {
        matches!(
            self,
            FieldKind::RationalsQ | FieldKind::FunctionFieldOverAlgClosedChar0
        )
    }

    pub fn name(&self) -> &'static str {
        match self {
            FieldKind::RationalsQ => "Q",
            FieldKind::FunctionFieldOverAlgClosedChar0 => "finite extension of kappa(X)",
            FieldKind::AbstractHilbertian { .. } => "abstract hilbertian field",
            FieldKind::AbstractDedekindFraction { .. } => "fraction field of a Dedekind domain",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wire_and_flags() {
        let q: FieldKind = serde_json::from_str(r#"{"kind":"Q"}"#).unwrap();
        assert_eq!(q, FieldKind::RationalsQ);
        assert!(q.hilbertian() && q.infinite_prime_divisors());
        let d: FieldKind = serde_json::from_str(
            r#"{"kind":"abstract_dedekind_fraction","hilbertian":false,"infinite_prime_divisors":true}"#,
        )
        .unwrap();
        assert!(!d.hilbertian());
        assert!(!d.number_or_function_field());
        let back: FieldKind = serde_json::from_str(&serde_json::to_string(&d).unwrap()).unwrap();
        assert_eq!(back, d);
        assert!(serde_json::from_str::<FieldKind>(r#"{"kind":"R"}"#).is_err());
    }
}
