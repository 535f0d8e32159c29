//! The descriptors shipped under `fixtures/`, and the builders they come from.

use crate::algebra::{cyclotomic, RatPoly};
use crate::criteria::{atlas_data, co1_data, j2_data, psl2_data, th_and_baby, CriterionError};
use crate::extensions::builders::{
    an_five_point_data, an_three_cycle_data, an_trinomial_data, cubic_example, cyclotomic_realization, morse,
    sn_four_point_data, sqrt, sqrt_factored, trinomial_for,
};
use crate::extensions::{ExtensionDescriptor, FieldKind};

macro_rules! shipped {
    ($($name:literal),* $(,)?) => {
        /// `(file stem, JSON text)` for every bundled fixture.
        pub const FIXTURES: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../fixtures/", $name, ".json")))),*
        ];
    };
}

shipped!(
    "morse5",
    "trinomial_s5",
    "trinomial_s7",
    "sn_e3_n6",
    "sn_e3_n8",
    "an_e1_n7",
    "an_e2_n7",
    "an_e2_n8",
    "an_e3_n8",
    "cyclotomic5",
    "cyclotomic7",
    "sqrt_t",
    "sqrt_t2_plus_1",
    "sqrt_phi5",
    "sqrt_2_3",
    "cubic",
    "th",
    "baby",
    "j2",
    "monster_29",
    "monster_71",
    "co1",
    "psl2_5",
    "psl2_7",
);

/// Rebuilds the fixture `name` from its builder.
pub fn build(name: &str) -> Result<ExtensionDescriptor, CriterionError> {
    let q = |c: &[i64]| RatPoly::from_ints(c);
    let hilb = FieldKind::AbstractHilbertian { infinite_prime_divisors: true };
    Ok(match name {
        "morse5" => morse(&q(&[0, 1, 0, 0, 0, 1]))?,
        "trinomial_s5" => trinomial_for(5, 2)?,
        "trinomial_s7" => trinomial_for(7, 2)?,
        "sn_e3_n6" => sn_four_point_data(6)?,
        "sn_e3_n8" => sn_four_point_data(8)?,
        "an_e1_n7" => an_three_cycle_data(7)?,
        "an_e2_n7" => an_trinomial_data(7, 1)?,
        "an_e2_n8" => an_trinomial_data(8, 1)?,
        "an_e3_n8" => an_five_point_data(8)?,
        "cyclotomic5" => cyclotomic_realization(5)?,
        "cyclotomic7" => cyclotomic_realization(7)?,
        "sqrt_t" => sqrt(&RatPoly::t())?,
        "sqrt_t2_plus_1" => sqrt(&q(&[1, 0, 1]))?,
        "sqrt_phi5" => sqrt(&cyclotomic(5))?,
        "sqrt_2_3" => sqrt_factored(&[q(&[-2, 0, 1]), q(&[-3, 0, 1])])?,
        "cubic" => cubic_example()?,
        "th" => th_and_baby()?.0,
        "baby" => th_and_baby()?.1,
        "j2" => j2_data()?.with_field(hilb),
        "monster_29" => atlas_data("M (2A, 3B, 29A)", "M", &[("2A", 2, true), ("3B", 3, true), ("29A", 29, true)])?
            .with_field(hilb),
        "monster_71" => atlas_data("M (C2, C3, C71)", "M", &[("C2", 2, true), ("C3", 3, true), ("C71", 71, true)])?
            .with_field(hilb),
        "co1" => co1_data()?.with_field(hilb),
        "psl2_5" => psl2_data(5, "PSL2(5) (2A, 3A, 5A)", &[2, 3, 5], true)?,
        "psl2_7" => psl2_data(7, "PSL2(7) (2A, 3A, 7A)", &[2, 3, 7], true)?,
        _ => return Err(CriterionError::InvalidParams(format!("no fixture named {name:?}"))),
    })
}

/// The bundled fixture `name` (with or without `.json`), parsed.
pub fn load(name: &str) -> Option<Result<ExtensionDescriptor, crate::extensions::ExtensionError>> {
    let stem = name.strip_suffix(".json").unwrap_or(name);
    FIXTURES
        .iter()
        .find(|(n, _)| *n == stem)
        .map(|(_, text)| ExtensionDescriptor::parse_json(text))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_match_builders() {
        let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
        let bless = std::env::var_os("GALOIS_PARAM_BLESS").is_some();
        for (name, text) in FIXTURES {
            let built = build(name).unwrap();
            if bless {
                std::fs::write(dir.join(format!("{name}.json")), built.to_json() + "\n").unwrap();
                continue;
            }
            let parsed = ExtensionDescriptor::parse_json(text).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(parsed, built, "{name} is stale; rerun with GALOIS_PARAM_BLESS=1");
        }
    }
}
