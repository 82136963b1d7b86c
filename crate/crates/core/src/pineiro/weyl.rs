use crate::error::{Error, Result};
use crate::exactmath::{as_integer, int, Rational};
use crate::spaces::Params;

/// An element of the symmetric group on `{0, 1, ..., r}` together with a
/// reduced word in the simple transpositions `s_1..s_r`, where `s_i` swaps
/// `i - 1` and `i`.
///
/// The word `[i_1, ..., i_n]` denotes the permutation `s_{i_1} ∘ ... ∘ s_{i_n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    perm: Vec<usize>,
}

impl WeylElement {
    pub fn identity(r: usize) -> Self {
        WeylElement { perm: (0..=r).collect() }
    }

    pub fn simple(r: usize, i: usize) -> Result<Self> {
        if i == 0 || i > r {
            return Err(Error::IndexOutOfRange { index: i, max: r });
        }
        let mut w = Self::identity(r);
        w.perm.swap(i - 1, i);
        Ok(w)
    }

    pub fn from_word(r: usize, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(r);
        for &i in word {
            w = w.compose(&Self::simple(r, i)?);
        }
        Ok(w)
    }

    pub fn from_perm(perm: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if p >= perm.len() || seen[p] {
                return Err(Error::InvalidInput(format!("not a permutation: {perm:?}")));
            }
            seen[p] = true;
        }
        if perm.is_empty() {
            return Err(Error::InvalidInput("empty permutation".into()));
        }
        Ok(WeylElement { perm })
    }

    pub fn r(&self) -> usize {
        self.perm.len() - 1
    }

    /// `w(i)`.
    pub fn apply(&self, i: usize) -> usize {
        self.perm[i]
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        WeylElement {
            perm: other.perm.iter().map(|&j| self.perm[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        WeylElement { perm: inv }
    }

    pub fn length(&self) -> usize {
        let n = self.perm.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.perm[i] > self.perm[j])
            .count()
    }

    /// A reduced word, canonical for the element: repeatedly strip the
    /// smallest right descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.perm.clone();
        let mut rev = Vec::new();
        while let Some(i) = (1..w.len()).find(|&i| w[i - 1] > w[i]) {
            // w ∘ s_i swaps the values at positions i-1 and i.
            w.swap(i - 1, i);
            rev.push(i);
        }
        rev.reverse();
        rev
    }

    /// Every element of the group, in lexicographic order of permutations.
    pub fn all(r: usize) -> Vec<WeylElement> {
        let mut out = Vec::new();
        let mut perm: Vec<usize> = (0..=r).collect();
        permute(&mut perm, 0, &mut out);
        out.sort_by(|a, b| a.perm.cmp(&b.perm));
        out
    }
}

fn permute(p: &mut Vec<usize>, start: usize, out: &mut Vec<WeylElement>) {
    if start == p.len() {
        out.push(WeylElement { perm: p.clone() });
        return;
    }
    for i in start..p.len() {
        p.swap(start, i);
        permute(p, start + 1, out);
        p.swap(start, i);
    }
}

/// `s_i · m`: positions `i-1, i, i+1` become
/// `m_{i-1} + m_i + 1, -m_i - 2, m_{i+1} + m_i + 1`.
pub fn simple_act_m(i: usize, m: &[Rational]) -> Vec<Rational> {
    let mut out = m.to_vec();
    let mi = m[i - 1].clone();
    if i >= 2 {
        out[i - 2] = &m[i - 2] + &mi + int(1);
    }
    out[i - 1] = -&mi - int(2);
    if i < m.len() {
        out[i] = &m[i] + &mi + int(1);
    }
    out
}

/// `(s_i)_k l`: replaces `l_i` by `l_{i-1} + l_{i+1} - l_i`.
pub fn simple_act_l(i: usize, l: &[i64], k: &Rational) -> Result<Vec<i64>> {
    let prev = if i == 1 {
        as_integer(k).ok_or_else(|| {
            Error::InvalidInput(format!("the l-action of s_1 needs an integer k, got {k}"))
        })?
    } else {
        l[i - 2]
    };
    let next = l.get(i).copied().unwrap_or(0);
    let mut out = l.to_vec();
    out[i - 1] = prev + next - l[i - 1];
    Ok(out)
}

/// `w · m`, acting with the letters of the reduced word from left to right.
/// With this convention `v_j(w · m, (w)_k l, k) = v_{w(j)}(m, l, k)`.
pub fn weyl_act_m(w: &WeylElement, m: &[Rational]) -> Vec<Rational> {
    w.reduced_word()
        .into_iter()
        .fold(m.to_vec(), |acc, i| simple_act_m(i, &acc))
}

/// `(w)_k l`, same letter order as [`weyl_act_m`].
pub fn weyl_act_l(w: &WeylElement, l: &[i64], k: &Rational) -> Result<Vec<i64>> {
    w.reduced_word()
        .into_iter()
        .try_fold(l.to_vec(), |acc, i| simple_act_l(i, &acc, k))
}

/// Both actions at once; `k` is unchanged.
pub fn weyl_act(w: &WeylElement, p: &Params) -> Result<Params> {
    Ok(Params {
        m: weyl_act_m(w, &p.m),
        l: weyl_act_l(w, &p.l, &p.k)?,
        k: p.k.clone(),
    })
}
