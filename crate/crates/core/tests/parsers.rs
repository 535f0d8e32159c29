//! Runs every parser over the fuzz corpus seeds and byte-level mutations of
//! them. Only panics count as failures; errors are expected.

use std::fs;
use std::path::Path;

use galois_param_core::algebra::{format_rational, parse_rational, BiPoly, RatPoly};
use galois_param_core::criteria::parse_small_group;
use galois_param_core::extensions::ExtensionDescriptor;
use galois_param_core::groups::{ClassLabel, CycleType, Group};
use galois_param_core::numbertheory::{legendre_solvable, TernaryForm};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn seeds(target: &str) -> Vec<Vec<u8>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<Vec<u8>> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| fs::read(e.unwrap().path()).unwrap())
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

const ALPHABET: &[u8] = b"0123456789-/^ []{}\",:abcdefghijklmnopqrstuvwxyz";

fn mutate(rng: &mut ChaCha8Rng, seed: &[u8]) -> Vec<u8> {
    let mut v = seed.to_vec();
    for _ in 0..rng.gen_range(1..=4) {
        let at = if v.is_empty() { 0 } else { rng.gen_range(0..v.len()) };
        match rng.gen_range(0..5) {
            0 if !v.is_empty() => v[at] = ALPHABET[rng.gen_range(0..ALPHABET.len())],
            1 => v.insert(at, ALPHABET[rng.gen_range(0..ALPHABET.len())]),
            2 if !v.is_empty() => {
                v.remove(at);
            }
            3 => v.truncate(at),
            _ => {
                // repeat a digit run to make big numbers
                v.splice(at..at, std::iter::repeat_n(b'9', rng.gen_range(1..30)));
            }
        }
    }
    v
}

fn exercise(target: &str, rounds: usize, f: impl Fn(&str)) {
    let mut rng = ChaCha8Rng::seed_from_u64(0xf022);
    for seed in seeds(target) {
        if let Ok(s) = std::str::from_utf8(&seed) {
            f(s);
        }
        for _ in 0..rounds {
            let m = mutate(&mut rng, &seed);
            if let Ok(s) = std::str::from_utf8(&m) {
                f(s);
            }
        }
    }
}

#[test]
fn rationals() {
    exercise("parse_rational", 400, |s| {
        if let Ok(q) = parse_rational(s) {
            assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
        }
    });
}

#[test]
fn polynomials() {
    exercise("parse_poly", 400, |s| {
        if let Ok(p) = RatPoly::parse_json(s) {
            assert_eq!(RatPoly::from_wire(&p.to_wire()).unwrap(), p);
        }
    });
}

#[test]
fn bivariate_polynomials() {
    exercise("parse_bipoly", 400, |s| {
        if let Ok(wire) = serde_json::from_str::<Vec<Vec<String>>>(s) {
            if let Ok(p) = BiPoly::from_wire(&wire) {
                assert_eq!(BiPoly::from_wire(&p.to_wire()).unwrap(), p);
            }
        }
    });
}

#[test]
fn cycle_types() {
    exercise("parse_cycle_type", 400, |s| {
        if let Ok(ct) = s.parse::<CycleType>() {
            assert_eq!(ct.to_string().parse::<CycleType>().unwrap(), ct);
        }
        let _ = ClassLabel::sn_str(s);
    });
}

#[test]
fn groups() {
    exercise("parse_group", 200, |s| {
        let _ = Group::parse_json(s);
        let _ = parse_small_group(s);
    });
}

#[test]
fn descriptors() {
    exercise("parse_descriptor", 100, |s| {
        if let Ok(e) = ExtensionDescriptor::parse_json(s) {
            assert_eq!(ExtensionDescriptor::parse_json(&e.to_json()).unwrap(), e);
        }
    });
}

#[test]
fn ternary_forms() {
    exercise("parse_ternary_form", 400, |s| {
        if let Ok(f) = TernaryForm::parse_json(s) {
            let _ = legendre_solvable(&f);
        }
    });
}
