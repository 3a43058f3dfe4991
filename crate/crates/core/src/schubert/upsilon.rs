//! Principal evaluations `Υ_w = 𝔖_w(1,...,1)` and `Υ_w(c) = Υ_{1^c×w}`.

use std::collections::HashMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::perm::{classify, reduced_words_iter, vexillary_shapes, Permutation, REDUCED_WORD_CAP};
use super::words::skewsh;
use crate::error::{domain, precondition, Error, Result};
use crate::excited::{count_excited, CountMethod};
use crate::exactmath::factorial;
use crate::shapes::{syt_count_oracle, SkewShape, SytMethod};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UpsilonMethod {
    /// `(1/ℓ!) Σ_{a∈R(w)} a_1⋯a_ℓ`.
    Macdonald,
    /// `|E(λ(w)/μ(w))|`, vexillary `w` only.
    VexillaryExcited,
    /// `r_1⋯r_ℓ f^{λ/μ} / ℓ!`, 321-avoiding `w` only.
    Skew321,
    /// The cheapest applicable method.
    Auto,
}

impl FromStr for UpsilonMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "macdonald" => Ok(Self::Macdonald),
            "vexillary_excited" | "vexillary" => Ok(Self::VexillaryExcited),
            "skew321" => Ok(Self::Skew321),
            "auto" => Ok(Self::Auto),
            _ => Err(domain!("unknown method {s:?}")),
        }
    }
}

/// `Σ_{a∈R(w)} (c+a_1)⋯(c+a_ℓ)` by the recursion on the last letter,
/// memoized over permutations below `w`.
fn macdonald_sum(w: &Permutation, c: usize) -> BigInt {
    fn go(w: &Permutation, c: usize, memo: &mut HashMap<Permutation, BigInt>) -> BigInt {
        if w.is_identity() {
            return BigInt::one();
        }
        if let Some(v) = memo.get(w) {
            return v.clone();
        }
        let mut s = BigInt::zero();
        for i in w.descents() {
            s += go(&w.swap(i), c, memo) * (c + i);
        }
        memo.insert(w.clone(), s.clone());
        s
    }
    go(w, c, &mut HashMap::new())
}

fn exact_quotient(num: BigInt, den: BigInt, what: &str) -> Result<BigInt> {
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::Verification(format!("{what} is not an integer")));
    }
    Ok(q)
}

pub fn upsilon(w: &Permutation, method: UpsilonMethod) -> Result<BigInt> {
    let class = classify(w);
    match method {
        UpsilonMethod::Macdonald => {
            exact_quotient(macdonald_sum(w, 0), factorial(w.length() as u64), "the Macdonald sum")
        }
        UpsilonMethod::VexillaryExcited => {
            let (mu, lambda) = vexillary_shapes(w)?;
            count_excited(&SkewShape::new(lambda, mu)?, CountMethod::Determinant)
        }
        UpsilonMethod::Skew321 => {
            if !class.avoid321 {
                return Err(precondition!("{w} contains 321"));
            }
            let (shape, offset) = skewsh(w)?;
            let word = super::words::reading_word(&shape);
            let prod: BigInt = word.iter().map(|&r| BigInt::from(r + offset)).product();
            let f = syt_count_oracle(&shape, SytMethod::Determinant)?;
            exact_quotient(prod * f, factorial(word.len() as u64), "the reading-word product")
        }
        UpsilonMethod::Auto => {
            if class.vexillary {
                upsilon(w, UpsilonMethod::VexillaryExcited)
            } else if class.avoid321 {
                upsilon(w, UpsilonMethod::Skew321)
            } else {
                upsilon(w, UpsilonMethod::Macdonald)
            }
        }
    }
}

/// `Υ_w(c) = (1/ℓ!) Σ_{a∈R(w)} (c+a_1)⋯(c+a_ℓ) = Υ_{1^c×w}`.
pub fn upsilon_shifted(w: &Permutation, c: usize, method: UpsilonMethod) -> Result<BigInt> {
    match method {
        UpsilonMethod::Macdonald => {
            exact_quotient(macdonald_sum(w, c), factorial(w.length() as u64), "the shifted Macdonald sum")
        }
        _ => upsilon(&w.direct_sum(c), method),
    }
}

/// `(1/ℓ!) Σ_{a∈R(w)} a_1⋯a_ℓ` by streaming every reduced word; the cap
/// bounds the number of words visited.
pub fn upsilon_by_words(w: &Permutation, cap: Option<usize>) -> Result<BigInt> {
    let cap = cap.unwrap_or(REDUCED_WORD_CAP);
    let mut total = BigInt::zero();
    for (k, word) in reduced_words_iter(w).enumerate() {
        if k == cap {
            return Err(Error::Resource(format!("{w} has more than {cap} reduced words")));
        }
        total += word.iter().map(|&r| BigInt::from(r)).product::<BigInt>();
    }
    exact_quotient(total, factorial(w.length() as u64), "the word sum")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let p = |s: &str| Permutation::parse(s).unwrap();
        for m in [UpsilonMethod::Macdonald, UpsilonMethod::VexillaryExcited, UpsilonMethod::Auto] {
            assert_eq!(upsilon(&p("1432"), m).unwrap(), BigInt::from(5));
        }
        assert_eq!(upsilon(&p("214365"), UpsilonMethod::Macdonald).unwrap(), BigInt::from(15));
        assert_eq!(upsilon(&p("214365"), UpsilonMethod::Skew321).unwrap(), BigInt::from(15));
        assert_eq!(upsilon(&Permutation::identity(4), UpsilonMethod::Auto).unwrap(), BigInt::one());
        assert_eq!(upsilon_shifted(&p("321"), 1, UpsilonMethod::Macdonald).unwrap(), BigInt::from(5));
        assert_eq!(upsilon_shifted(&p("21"), 1, UpsilonMethod::Auto).unwrap(), BigInt::from(2));
        assert_eq!(upsilon_by_words(&p("1432"), None).unwrap(), BigInt::from(5));
        assert!(upsilon(&p("2143"), UpsilonMethod::VexillaryExcited).is_err());
    }
}
