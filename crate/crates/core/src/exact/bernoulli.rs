use std::sync::{OnceLock, RwLock};

use rug::{Integer, Rational};

use crate::error::{Error, Result};

use super::character::DirichletCharacter;

/// Default largest index the global table will compute.
pub const DEFAULT_BERNOULLI_CAP: usize = 10_000;

/// Append-only memo of Bernoulli numbers `B_0, B_1, ...` with `B_1 = -1/2`.
///
/// Extension runs the Akiyama-Tanigawa transform from scratch up to the new
/// length (at least doubling), so readers only ever see complete prefixes.
#[derive(Debug)]
pub struct BernoulliTable {
    values: RwLock<Vec<Rational>>,
    cap: usize,
}

impl BernoulliTable {
    pub fn new() -> Self {
        Self::with_cap(DEFAULT_BERNOULLI_CAP)
    }

    pub fn with_cap(cap: usize) -> Self {
        BernoulliTable {
            values: RwLock::new(Vec::new()),
            cap,
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn len(&self) -> usize {
        self.values.read().expect("bernoulli table poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, n: usize) -> Result<Rational> {
        if n > self.cap {
            return Err(Error::Resource(format!(
                "Bernoulli index {n} exceeds the configured cap {}",
                self.cap
            )));
        }
        {
            let values = self.values.read().expect("bernoulli table poisoned");
            if let Some(b) = values.get(n) {
                return Ok(b.clone());
            }
        }
        let mut values = self.values.write().expect("bernoulli table poisoned");
        if values.len() <= n {
            let target = (n + 1).max(2 * values.len()).min(self.cap + 1);
            *values = akiyama_tanigawa(target);
        }
        Ok(values[n].clone())
    }
}

impl Default for BernoulliTable {
    fn default() -> Self {
        Self::new()
    }
}

/// `B_0 .. B_{count-1}`.
fn akiyama_tanigawa(count: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(count);
    let mut a: Vec<Rational> = Vec::with_capacity(count);
    for m in 0..count {
        a.push(Rational::from((1, m as u64 + 1)));
        for j in (1..=m).rev() {
            let diff = Rational::from(&a[j - 1] - &a[j]);
            a[j - 1] = diff * Integer::from(j);
        }
        // odd-index values are exact zeros past B_1; the transform agrees
        out.push(a[0].clone());
    }
    if count > 1 {
        out[1] = Rational::from((-1, 2));
    }
    out
}

fn global() -> &'static BernoulliTable {
    static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
    TABLE.get_or_init(BernoulliTable::new)
}

/// Exact Bernoulli number `B_n` (with `B_1 = -1/2`), memoized globally.
pub fn bernoulli(n: usize) -> Result<Rational> {
    global().get(n)
}

pub fn binomial(n: u64, k: u64) -> Integer {
    Integer::from(Integer::binomial_u(n as u32, k as u32))
}

pub fn factorial(n: u64) -> Integer {
    Integer::from(Integer::factorial(n as u32))
}

/// `B_n(x) = sum_k C(n,k) B_k x^{n-k}`.
pub fn bernoulli_poly(n: usize, x: &Rational) -> Result<Rational> {
    let mut acc = Rational::new();
    let mut xp = Rational::from(1);
    // accumulate from k = n down to 0 so x^{n-k} grows incrementally
    for k in (0..=n).rev() {
        let b = bernoulli(k)?;
        if b != 0 {
            acc += b * &xp * binomial(n as u64, k as u64);
        }
        xp *= x;
    }
    Ok(acc)
}

/// Generalized Bernoulli number `B_{n,χ} = L^{n-1} sum_{a=1}^{L} χ(a) B_n(a/L)`.
pub fn generalized_bernoulli(n: usize, chi: &DirichletCharacter) -> Result<Rational> {
    let l = chi.modulus();
    let mut acc = Rational::new();
    for a in 1..=l {
        let v = chi.value(a);
        if v == 0 {
            continue;
        }
        let bp = bernoulli_poly(n, &Rational::from((a, l)))?;
        if v > 0 {
            acc += bp;
        } else {
            acc -= bp;
        }
    }
    let ln = Rational::from(l);
    let scale = if n == 0 {
        ln.recip()
    } else {
        Rational::from(Integer::from(Integer::u_pow_u(l as u32, n as u32 - 1)))
    };
    Ok(acc * scale)
}
