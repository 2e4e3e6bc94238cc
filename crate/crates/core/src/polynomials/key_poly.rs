use std::fmt;

use super::coeff::Coeff;
use super::sparse::SparsePoly;
use crate::error::{Error, Result};
use crate::maps::RPermutation;
use crate::tableaux::Partition;

/// A weak composition `(α_1, ..., α_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = body
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Composition { parts })
    }

    /// `π.λ`, defined by `α_{π_i} = λ_i`.
    pub fn permuted(shape: &Partition, p: &RPermutation) -> Result<Self> {
        shape.rset().check_same(p.rset())?;
        let mut parts = vec![0; shape.n()];
        for (i, &v) in p.entries().iter().enumerate() {
            parts[v - 1] = shape.parts()[i];
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    fn ascents(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.parts.len().saturating_sub(1)).filter(|&i| self.parts[i] < self.parts[i + 1])
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.parts.iter().map(|v| v.to_string()).collect();
        f.write_str(&items.join(","))
    }
}

/// Which ascent the divided difference recursion descends through.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AscentChoice {
    Smallest,
    Largest,
}

/// `(x_i f - x_{i+1} f|_{x_i <-> x_{i+1}}) / (x_i - x_{i+1})` for 0-based `i`.
pub fn isobaric_divided_difference(f: &SparsePoly, i: usize) -> Result<SparsePoly> {
    let n = f.n();
    let a = &SparsePoly::variable(n, i) * f;
    let b = &SparsePoly::variable(n, i + 1) * &f.swap_vars(i, i + 1);
    (&a - &b).div_by_difference(i, i + 1)
}

/// The key polynomial `κ_α` by the divided difference recursion through the
/// smallest ascent.
pub fn key_poly_dd(alpha: &Composition) -> Result<SparsePoly> {
    key_poly_dd_with(alpha, AscentChoice::Smallest)
}

pub fn key_poly_dd_with(alpha: &Composition, choice: AscentChoice) -> Result<SparsePoly> {
    let pick = match choice {
        AscentChoice::Smallest => alpha.ascents().next(),
        AscentChoice::Largest => alpha.ascents().last(),
    };
    match pick {
        None => Ok(SparsePoly::monomial(alpha.parts.iter().map(|&p| p as u32).collect(), Coeff::ONE)),
        Some(i) => {
            let mut swapped = alpha.clone();
            swapped.parts.swap(i, i + 1);
            isobaric_divided_difference(&key_poly_dd_with(&swapped, choice)?, i)
        }
    }
}
