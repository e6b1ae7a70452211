//! The faithful right-handed Artin action of `B_n` on the free group
//! `F_n = <x1, ..., xn>`: `s<i>` sends `x_i -> x_i x_{i+1} x_i^-1` and
//! `x_{i+1} -> x_i`. Image lengths can grow exponentially, so every entry
//! point takes a letter budget.

use super::BraidWord;
use crate::error::{Error, Result};
use crate::words::{Letter, Word};

/// Images of `x1..xn` under the automorphism induced by `w`. The map from
/// braids to automorphisms satisfies `act(uv) = act(u) ∘ act(v)`.
pub fn artin_images(w: &BraidWord, max_len: usize) -> Result<Vec<Word>> {
    let n = w.n();
    let mut imgs: Vec<Word> = (1..=n as u8).map(|k| Word::gen(Letter::X(k))).collect();
    // act(prefix * a)(x) = act(prefix)(act(a)(x)): only two images change
    for s in w.word().syms() {
        let i = match s.letter {
            Letter::Sigma(i) => i as usize - 1,
            _ => unreachable!("braid words hold only sigma letters"),
        };
        let (a, b) = (imgs[i].clone(), imgs[i + 1].clone());
        if !s.inv {
            imgs[i] = a.mul_reduced(&b).mul_reduced(&a.inverse());
            imgs[i + 1] = a;
        } else {
            imgs[i] = b.clone();
            imgs[i + 1] = b.inverse().mul_reduced(&a).mul_reduced(&b);
        }
        let longest = imgs[i].len().max(imgs[i + 1].len());
        if longest > max_len {
            return Err(Error::LengthBudget(max_len));
        }
    }
    Ok(imgs)
}

/// Image of `x_k` under the action of `w`.
pub fn artin_act(w: &BraidWord, k: usize, max_len: usize) -> Result<Word> {
    if k == 0 || k > w.n() {
        return Err(Error::Index(format!("x{k} with n = {}", w.n())));
    }
    let mut imgs = artin_images(w, max_len)?;
    Ok(imgs.swap_remove(k - 1))
}

/// Equality in `B_n` decided by comparing free-group actions.
pub fn artin_equal(u: &BraidWord, v: &BraidWord, max_len: usize) -> Result<bool> {
    if u.n() != v.n() {
        return Err(Error::StrandMismatch(u.n(), v.n()));
    }
    Ok(artin_images(u, max_len)? == artin_images(v, max_len)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    fn x(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn generator_images() {
        assert_eq!(artin_act(&bw(2, "s1"), 2, 100).unwrap(), x("x1"));
        assert_eq!(artin_act(&bw(2, "s1"), 1, 100).unwrap(), x("x1 x2 x1^-1"));
        for k in 1..=3 {
            assert_eq!(artin_act(&bw(3, "s1 s1^-1"), k, 100).unwrap(), Word::gen(Letter::X(k as u8)));
        }
        assert!(artin_act(&bw(2, "s1"), 3, 100).is_err());
    }

    #[test]
    fn braid_relation_and_inequality() {
        assert!(artin_equal(&bw(3, "s1 s2 s1"), &bw(3, "s2 s1 s2"), 100).unwrap());
        assert!(!artin_equal(&bw(2, "s1"), &bw(2, "s1^-1"), 100).unwrap());
    }

    #[test]
    fn product_of_generators_is_fixed() {
        let w = bw(4, "s1 s3^-1 s2 s2 s1^-1 s3");
        let imgs = artin_images(&w, 1000).unwrap();
        let prod = imgs.iter().fold(Word::empty(), |acc, i| acc.mul_reduced(i));
        assert_eq!(prod, x("x1 x2 x3 x4"));
    }

    #[test]
    fn budget_is_enforced() {
        let w = bw(3, "s1 s2 s1 s2 s1 s2 s1 s2 s1 s2 s1 s2 s1^-1 s2 s1^-1 s2");
        assert_eq!(artin_images(&w, 4), Err(Error::LengthBudget(4)));
    }
}
