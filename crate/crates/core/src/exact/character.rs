use std::fmt;

use rug::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Real Dirichlet character modulo `L`, stored as its value table on
/// residues `0..L`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DirichletCharacter {
    modulus: u64,
    values: Vec<i8>,
    is_principal: bool,
}

/// How a character table is produced by [`make_character`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CharacterSource {
    Table(Vec<i64>),
    /// Kronecker symbol `(D/·)` of a fundamental discriminant, induced to the
    /// requested modulus (which must be a multiple of `|D|`).
    Quadratic {
        discriminant: i64,
    },
}

/// Which invariant a rejected table violates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CharacterViolation {
    Length { expected: u64, got: usize },
    Realness { residue: u64, value: i64 },
    Support { residue: u64 },
    Multiplicativity { a: u64, b: u64 },
    Principal,
    Discriminant { discriminant: i64 },
}

impl fmt::Display for CharacterViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharacterViolation::Length { expected, got } => {
                write!(f, "length: table has {got} entries, modulus is {expected}")
            }
            CharacterViolation::Realness { residue, value } => {
                write!(f, "realness: value {value} at residue {residue} is not in {{-1, 0, 1}}")
            }
            CharacterViolation::Support { residue } => {
                write!(
                    f,
                    "support: value at residue {residue} must be zero exactly when gcd(a, L) > 1"
                )
            }
            CharacterViolation::Multiplicativity { a, b } => {
                write!(f, "multiplicativity: chi({a}*{b}) != chi({a}) chi({b})")
            }
            CharacterViolation::Principal => write!(f, "principal: a nonprincipal character was requested"),
            CharacterViolation::Discriminant { discriminant } => {
                write!(
                    f,
                    "discriminant: {discriminant} is not a fundamental discriminant dividing the modulus"
                )
            }
        }
    }
}

impl From<CharacterViolation> for Error {
    fn from(v: CharacterViolation) -> Self {
        Error::Validation(v.to_string())
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl DirichletCharacter {
    /// The principal character modulo `modulus`.
    pub fn principal(modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        let values = (0..modulus).map(|a| i8::from(gcd(a, modulus) == 1)).collect();
        DirichletCharacter {
            modulus,
            values,
            is_principal: true,
        }
    }

    /// Validates an explicit value table.
    pub fn from_table(modulus: u64, table: &[i64]) -> Result<Self> {
        Self::validate(modulus, table).map_err(Error::from)
    }

    fn validate(modulus: u64, table: &[i64]) -> std::result::Result<Self, CharacterViolation> {
        if modulus == 0 || table.len() as u64 != modulus {
            return Err(CharacterViolation::Length {
                expected: modulus,
                got: table.len(),
            });
        }
        for (a, &v) in table.iter().enumerate() {
            if !(-1..=1).contains(&v) {
                return Err(CharacterViolation::Realness {
                    residue: a as u64,
                    value: v,
                });
            }
        }
        for (a, &v) in table.iter().enumerate() {
            let unit = gcd(a as u64, modulus) == 1;
            if unit != (v != 0) {
                return Err(CharacterViolation::Support { residue: a as u64 });
            }
        }
        for a in 0..modulus {
            for b in a..modulus {
                let ab = ((a as u128 * b as u128) % modulus as u128) as usize;
                if table[ab] != table[a as usize] * table[b as usize] {
                    return Err(CharacterViolation::Multiplicativity { a, b });
                }
            }
        }
        let values: Vec<i8> = table.iter().map(|&v| v as i8).collect();
        let is_principal = values.iter().all(|&v| v >= 0);
        Ok(DirichletCharacter {
            modulus,
            values,
            is_principal,
        })
    }

    /// Kronecker-symbol character `(D/·)` induced to `modulus`.
    pub fn quadratic(discriminant: i64, modulus: u64) -> Result<Self> {
        if !is_fundamental_discriminant(discriminant) || modulus == 0 || !modulus.is_multiple_of(discriminant.unsigned_abs()) {
            return Err(CharacterViolation::Discriminant { discriminant }.into());
        }
        let d = Integer::from(discriminant);
        let table: Vec<i64> = (0..modulus)
            .map(|a| {
                if gcd(a, modulus) != 1 {
                    0
                } else {
                    i64::from(d.kronecker(&Integer::from(a)))
                }
            })
            .collect();
        Self::from_table(modulus, &table)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_principal(&self) -> bool {
        self.is_principal
    }

    /// `χ(a)` for any integer `a`.
    pub fn value(&self, a: u64) -> i8 {
        self.values[(a % self.modulus) as usize]
    }

    pub fn value_signed(&self, a: i64) -> i8 {
        self.values[a.rem_euclid(self.modulus as i64) as usize]
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    /// `χ(-1)`; `+1` for even characters.
    pub fn parity(&self) -> i8 {
        self.value_signed(-1)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&CharacterFile {
            modulus: self.modulus,
            values: self.values.iter().map(|&v| i64::from(v)).collect(),
        })
        .expect("character serialization")
    }

    /// Loads `{"modulus": L, "values": [..]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: CharacterFile =
            serde_json::from_str(text).map_err(|e| Error::Validation(format!("character file: {e}")))?;
        Self::from_table(file.modulus, &file.values)
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct CharacterFile {
    modulus: u64,
    values: Vec<i64>,
}

/// Builds and validates a character. With `require_nonprincipal`, principal
/// tables are rejected.
pub fn make_character(
    modulus: u64,
    source: &CharacterSource,
    require_nonprincipal: bool,
) -> Result<DirichletCharacter> {
    let chi = match source {
        CharacterSource::Table(t) => DirichletCharacter::from_table(modulus, t)?,
        CharacterSource::Quadratic { discriminant } => DirichletCharacter::quadratic(*discriminant, modulus)?,
    };
    if require_nonprincipal && chi.is_principal() {
        return Err(CharacterViolation::Principal.into());
    }
    Ok(chi)
}

fn is_squarefree(mut n: u64) -> bool {
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// `D = 1`, or `D ≡ 1 (mod 4)` squarefree, or `D = 4m` with
/// `m ≡ 2, 3 (mod 4)` squarefree.
pub fn is_fundamental_discriminant(d: i64) -> bool {
    if d == 1 {
        return true;
    }
    if d == 0 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => is_squarefree(d.unsigned_abs()),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m.unsigned_abs())
        }
        _ => false,
    }
}

/// Every real nonprincipal character modulo `modulus`, ordered by the
/// discriminant of the inducing primitive character.
pub fn real_nonprincipal_characters(modulus: u64) -> Vec<DirichletCharacter> {
    let mut out = Vec::new();
    let m = modulus as i64;
    for d in -m..=m {
        if d == 1 || d == 0 || m % d.abs() != 0 || !is_fundamental_discriminant(d) {
            continue;
        }
        if let Ok(chi) = DirichletCharacter::quadratic(d, modulus) {
            if !chi.is_principal() {
                out.push(chi);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every multiplicative {-1,0,1} table mod L, by brute force.
    fn brute_force_tables(l: u64) -> Vec<Vec<i64>> {
        let units: Vec<u64> = (0..l).filter(|&a| gcd(a, l) == 1).collect();
        let mut out = Vec::new();
        for mask in 0u64..(1 << units.len()) {
            let mut t = vec![0i64; l as usize];
            for (i, &u) in units.iter().enumerate() {
                t[u as usize] = if mask >> i & 1 == 1 { -1 } else { 1 };
            }
            if DirichletCharacter::from_table(l, &t).is_ok() {
                out.push(t);
            }
        }
        out
    }

    #[test]
    fn mod_four_character_is_unique() {
        let tables = brute_force_tables(4);
        let nonprincipal: Vec<_> = tables.iter().filter(|t| t.contains(&-1)).collect();
        assert_eq!(nonprincipal, vec![&vec![0, 1, 0, -1]]);
        let chi = make_character(4, &CharacterSource::Table(vec![0, 1, 0, -1]), true).unwrap();
        assert!(!chi.is_principal());
        assert_eq!(chi.parity(), -1);
    }

    #[test]
    fn trivial_character() {
        let chi = make_character(1, &CharacterSource::Table(vec![1]), false).unwrap();
        assert!(chi.is_principal());
        assert_eq!(chi, DirichletCharacter::principal(1));
    }

    #[test]
    fn strict_mode_rejects_principal_tables() {
        let err = make_character(4, &CharacterSource::Table(vec![0, 1, 0, 1]), true).unwrap_err();
        assert!(err.to_string().contains("principal"), "{err}");
        assert!(make_character(4, &CharacterSource::Table(vec![0, 1, 0, 1]), false).is_ok());
    }

    #[test]
    fn violations_are_named() {
        let e = DirichletCharacter::from_table(4, &[0, 1, 1, -1]).unwrap_err();
        assert!(e.to_string().contains("support"), "{e}");
        let e = DirichletCharacter::from_table(4, &[0, 2, 0, -1]).unwrap_err();
        assert!(e.to_string().contains("realness"), "{e}");
        let e = DirichletCharacter::from_table(5, &[0, 1, -1, 1, -1]).unwrap_err();
        assert!(e.to_string().contains("multiplicativity"), "{e}");
        let e = DirichletCharacter::from_table(4, &[0, 1, 0]).unwrap_err();
        assert!(e.to_string().contains("length"), "{e}");
    }

    #[test]
    fn quadratic_generator_matches_brute_force() {
        for l in 2..=24u64 {
            let mut brute: Vec<Vec<i64>> = brute_force_tables(l).into_iter().filter(|t| t.contains(&-1)).collect();
            let mut gen: Vec<Vec<i64>> = real_nonprincipal_characters(l)
                .iter()
                .map(|c| c.values().iter().map(|&v| i64::from(v)).collect())
                .collect();
            brute.sort();
            gen.sort();
            assert_eq!(brute, gen, "modulus {l}");
        }
    }

    #[test]
    fn json_round_trip() {
        let chi = DirichletCharacter::quadratic(-3, 3).unwrap();
        let text = chi.to_json();
        assert_eq!(text, r#"{"modulus":3,"values":[0,1,-1]}"#);
        assert_eq!(DirichletCharacter::from_json(&text).unwrap(), chi);
        assert!(DirichletCharacter::from_json(r#"{"modulus":3}"#).is_err());
    }

    #[test]
    fn fundamental_discriminants() {
        let fd: Vec<i64> = (-20..=20).filter(|&d| is_fundamental_discriminant(d)).collect();
        assert_eq!(fd, vec![-20, -19, -15, -11, -8, -7, -4, -3, 1, 5, 8, 12, 13, 17]);
    }
}
