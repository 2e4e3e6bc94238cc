use std::collections::HashMap;

use bitvec::prelude::*;
use rayon::prelude::*;

use crate::error::Result;
use crate::maps::RPermutation;
use crate::polynomials::{content_monomial, Coeff, SparsePoly};
use crate::rtuples::{RSet, RTuple};
use crate::scanning::{scan, scan_by_remainders};
use crate::tableaux::{all_tableaux, key_of, Partition, Tableau};

use super::generate::r_permutations;

/// A set of tableaux of one shape, by enumeration index.
pub type TableauSet = BitVec;

/// Everything about one shape that several checks share: all tableaux, their
/// scanning tableaux, the keys, and failures of the scanning self-checks.
pub struct ShapeSweep {
    pub shape: Partition,
    pub rset: RSet,
    pub tableaux: Vec<Tableau>,
    pub index: HashMap<Tableau, usize>,
    /// Index of `S(T)` for each `T`.
    pub scans: Vec<usize>,
    pub row_ends: Vec<RTuple>,
    monomials: Vec<Vec<u32>>,
    pub perms: Vec<RPermutation>,
    /// Index of `Y_λ(π)` for each `π` in `perms`.
    pub keys: Vec<usize>,
    /// Tableaux where the two scan implementations disagree or a basic
    /// property of scanning fails.
    pub scan_failures: Vec<String>,
}

impl ShapeSweep {
    pub fn new(shape: &Partition) -> Result<Self> {
        let rset = shape.rset();
        let tableaux = all_tableaux(shape);
        let index: HashMap<Tableau, usize> = tableaux.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let scanned: Vec<(Tableau, Option<String>)> = tableaux
            .par_iter()
            .map(|t| {
                let s = scan(t)?;
                let mut problems = Vec::new();
                if scan_by_remainders(t) != s {
                    problems.push("remainder recursion disagrees");
                }
                if !s.is_key() {
                    problems.push("S(T) is not a key");
                }
                if !t.leq(&s) {
                    problems.push("T is not below S(T)");
                }
                if t.is_key() && &s != t {
                    problems.push("S(Y) differs from the key Y");
                }
                let msg = (!problems.is_empty()).then(|| format!("{}: {}", t.to_json(), problems.join(", ")));
                Ok((s, msg))
            })
            .collect::<Result<_>>()?;
        let mut scan_failures = Vec::new();
        let mut scans = Vec::with_capacity(tableaux.len());
        for (s, msg) in scanned {
            scan_failures.extend(msg);
            scans.push(index[&s]);
        }
        let perms = r_permutations(&rset);
        let keys: Vec<usize> =
            perms.iter().map(|p| key_of(shape, p).map(|y| index[&y])).collect::<Result<_>>()?;

        // The images of scanning are exactly the keys, each key is the only
        // tableau with its content, and each fiber holds its key.
        let mut images: Vec<usize> = scans.clone();
        images.sort_unstable();
        images.dedup();
        let mut sorted_keys = keys.clone();
        sorted_keys.sort_unstable();
        if images != sorted_keys {
            scan_failures.push(format!("scan images of {shape} are not the keys"));
        }
        let monomials: Vec<Vec<u32>> = tableaux.iter().map(content_monomial).collect();
        let mut by_content: HashMap<&[u32], usize> = HashMap::new();
        for m in &monomials {
            *by_content.entry(m).or_default() += 1;
        }
        for &k in &keys {
            if by_content[monomials[k].as_slice()] != 1 {
                scan_failures.push(format!("key {} shares its content", tableaux[k].to_json()));
            }
            if scans[k] != k {
                scan_failures.push(format!("key {} is outside its own fiber", tableaux[k].to_json()));
            }
        }
        let row_ends = tableaux.iter().map(Tableau::row_end_list).collect();
        Ok(ShapeSweep { shape: shape.clone(), rset, tableaux, index, scans, row_ends, monomials, perms, keys, scan_failures })
    }

    pub fn len(&self) -> usize {
        self.tableaux.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tableaux.is_empty()
    }

    fn collect(&self, f: impl Fn(usize) -> bool) -> TableauSet {
        (0..self.len()).map(f).collect()
    }

    /// `D_λ(π)` for the permutation at position `p` of `perms`.
    pub fn demazure(&self, p: usize) -> TableauSet {
        let y = &self.tableaux[self.keys[p]];
        let below: TableauSet = self.collect(|k| self.tableaux[k].is_key() && self.tableaux[k].leq(y));
        self.collect(|t| below[self.scans[t]])
    }

    /// The principal ideal below the tableau at index `t`.
    pub fn ideal(&self, t: usize) -> TableauSet {
        let top = &self.tableaux[t];
        self.collect(|u| self.tableaux[u].leq(top))
    }

    /// `S_λ(β)`: rows bounded by `β`, the latent column included.
    pub fn row_bound_set(&self, beta: &RTuple) -> TableauSet {
        self.collect(|u| self.row_ends[u].leq(beta))
    }

    /// Tableaux whose row end list is exactly `alpha`.
    pub fn row_end_fiber(&self, alpha: &RTuple) -> TableauSet {
        self.collect(|u| &self.row_ends[u] == alpha)
    }

    /// The join of a non-empty set.
    pub fn join_of(&self, set: &TableauSet) -> Option<Tableau> {
        set.iter_ones().map(|i| self.tableaux[i].clone()).reduce(|a, b| a.join(&b).expect("same shape"))
    }

    /// `Σ x^Θ(T)` over a set.
    pub fn poly(&self, set: &TableauSet) -> SparsePoly {
        let mut p = SparsePoly::zero(self.shape.n());
        for i in set.iter_ones() {
            p.add_term(self.monomials[i].clone(), &Coeff::ONE);
        }
        p
    }

    pub fn perm_index(&self, p: &RPermutation) -> Option<usize> {
        self.perms.iter().position(|q| q == p)
    }

    pub fn describe(&self, set: &TableauSet) -> String {
        let items: Vec<String> = set.iter_ones().map(|i| self.tableaux[i].to_json()).collect();
        format!("[{}]", items.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_shape() {
        let s = ShapeSweep::new(&Partition::parse("2,1,0").unwrap()).unwrap();
        assert_eq!(s.len(), 8);
        assert!(s.scan_failures.is_empty(), "{:?}", s.scan_failures);
        assert_eq!(s.perms.len(), 6);
        let top = s.perms.len() - 1;
        assert_eq!(s.demazure(top).count_ones(), 8);
        assert_eq!(s.poly(&s.demazure(0)).to_string(), "x1^2*x2");
    }
}
