use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::Partition;
use crate::error::{Error, Result};
use crate::rtuples::RTuple;

/// A semistandard tableau stored column by column. Column `j` (0-based)
/// holds `ζ_{j+1}` values, top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableauJson", into = "TableauJson")]
pub struct Tableau {
    shape: Partition,
    cols: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    n: usize,
    shape: Vec<usize>,
    columns: Vec<Vec<usize>>,
}

impl TryFrom<TableauJson> for Tableau {
    type Error = Error;

    fn try_from(j: TableauJson) -> Result<Self> {
        let shape = Partition::new(j.shape)?;
        if shape.n() != j.n {
            return Err(Error::InvalidTableau(format!("n is {} but the shape has {} parts", j.n, shape.n())));
        }
        Tableau::new(shape, j.columns)
    }
}

impl From<Tableau> for TableauJson {
    fn from(t: Tableau) -> Self {
        TableauJson { n: t.n(), shape: t.shape.parts().to_vec(), columns: t.cols }
    }
}

impl Tableau {
    pub fn new(shape: Partition, cols: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidTableau(m));
        let lens = shape.column_lengths();
        if cols.len() != lens.len() {
            return bad(format!("shape {shape} has {} columns, found {}", lens.len(), cols.len()));
        }
        let n = shape.n();
        for (j, col) in cols.iter().enumerate() {
            if col.len() != lens[j] {
                return bad(format!("column {} has {} boxes, expected {}", j + 1, col.len(), lens[j]));
            }
            for (i, &v) in col.iter().enumerate() {
                if v == 0 || v > n {
                    return bad(format!("value {v} at column {}, row {} is outside 1..={n}", j + 1, i + 1));
                }
                if i > 0 && col[i - 1] >= v {
                    return bad(format!("column {} does not strictly increase at row {}", j + 1, i + 1));
                }
                if j > 0 && cols[j - 1][i] > v {
                    return bad(format!("row {} decreases at column {}", i + 1, j + 1));
                }
            }
        }
        Ok(Tableau { shape, cols })
    }

    pub(crate) fn from_parts_unchecked(shape: Partition, cols: Vec<Vec<usize>>) -> Self {
        Tableau { shape, cols }
    }

    /// The tableau with `i` in every box of row `i`.
    pub fn minimum(shape: &Partition) -> Tableau {
        let cols = shape.column_lengths().into_iter().map(|z| (1..=z).collect()).collect();
        Tableau { shape: shape.clone(), cols }
    }

    pub fn parse_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Compact column form such as `1,3/2`: columns left to right, separated by `/`.
    pub fn parse_columns(shape: &Partition, s: &str) -> Result<Self> {
        let cols = if s.trim().is_empty() {
            Vec::new()
        } else {
            s.split('/')
                .map(|c| {
                    c.split(',')
                        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad value {t:?}"))))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?
        };
        Tableau::new(shape.clone(), cols)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tableaux serialize")
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.cols
    }

    pub fn column(&self, j: usize) -> &[usize] {
        &self.cols[j]
    }

    /// Value at 0-based column `j`, row `i`.
    pub fn get(&self, j: usize, i: usize) -> usize {
        self.cols[j][i]
    }

    /// All values in column-major order.
    pub fn values(&self) -> impl Iterator<Item = usize> + '_ {
        self.cols.iter().flatten().copied()
    }

    /// Number of occurrences of each value `1..=n`.
    pub fn content(&self) -> Vec<usize> {
        let mut c = vec![0; self.n()];
        for v in self.values() {
            c[v - 1] += 1;
        }
        c
    }

    /// `ω_i = T_{λ_i}(i)`, reading the latent column `T_0(i) = i` for empty rows.
    pub fn row_end_list(&self) -> RTuple {
        let e = (0..self.n())
            .map(|i| match self.shape.parts()[i] {
                0 => i + 1,
                l => self.cols[l - 1][i],
            })
            .collect();
        RTuple::new(self.shape.rset(), e).expect("row ends lie in [n]")
    }

    fn check_shape(&self, other: &Tableau) -> Result<()> {
        if self.shape == other.shape {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(format!("{} vs {}", self.shape, other.shape)))
        }
    }

    /// Entrywise comparison; tableaux of different shapes are incomparable.
    pub fn leq(&self, other: &Tableau) -> bool {
        self.shape == other.shape && self.values().zip(other.values()).all(|(a, b)| a <= b)
    }

    fn zip_with(&self, other: &Tableau, f: impl Fn(usize, usize) -> usize) -> Result<Tableau> {
        self.check_shape(other)?;
        let cols = self.cols.iter().zip(&other.cols).map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| f(x, y)).collect()).collect();
        Tableau::new(self.shape.clone(), cols).map_err(|e| Error::Internal(format!("lattice operation: {e}")))
    }

    pub fn join(&self, other: &Tableau) -> Result<Tableau> {
        self.zip_with(other, usize::max)
    }

    pub fn meet(&self, other: &Tableau) -> Result<Tableau> {
        self.zip_with(other, usize::min)
    }

    /// Column value sets are nested: each column contains the next one.
    pub fn is_key(&self) -> bool {
        self.cols.windows(2).all(|w| w[1].iter().all(|v| w[0].binary_search(v).is_ok()))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cols.is_empty() {
            return f.write_str("(empty)");
        }
        let width = self.n().to_string().len();
        for i in 0..self.cols[0].len() {
            if i > 0 {
                writeln!(f)?;
            }
            let row: Vec<String> =
                self.cols.iter().take_while(|c| c.len() > i).map(|c| format!("{:>width$}", c[i])).collect();
            f.write_str(&row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn validation() {
        let l = shape("2,1,0");
        assert!(Tableau::new(l.clone(), vec![vec![1, 3], vec![2]]).is_ok());
        assert!(Tableau::new(l.clone(), vec![vec![2, 3], vec![1]]).is_err());
        assert!(Tableau::new(l.clone(), vec![vec![2, 2], vec![2]]).is_err());
        assert!(Tableau::new(l, vec![vec![1, 3]]).is_err());
    }

    #[test]
    fn content_and_row_ends() {
        let t = Tableau::parse_columns(&shape("1,1,0"), "1,2").unwrap();
        assert_eq!(t.content(), vec![1, 1, 0]);
        assert_eq!(t.row_end_list(), RTuple::parse("1,2;3").unwrap());
        let t = Tableau::parse_columns(&shape("2,1,0"), "1,3/2").unwrap();
        assert_eq!(t.content(), vec![1, 1, 1]);
        assert_eq!(t.row_end_list(), RTuple::parse("2;3;3").unwrap());
    }

    #[test]
    fn json_round_trip() {
        let t = Tableau::parse_columns(&shape("2,1,0"), "1,3/2").unwrap();
        let s = t.to_json();
        assert_eq!(s, r#"{"n":3,"shape":[2,1,0],"columns":[[1,3],[2]]}"#);
        assert_eq!(Tableau::parse_json(&s).unwrap(), t);
        assert!(Tableau::parse_json(r#"{"n":3,"shape":[2,1,0],"columns":[[3,1],[2]]}"#).is_err());
    }

    #[test]
    fn lattice() {
        let l = shape("2,1,0");
        let a = Tableau::parse_columns(&l, "1,3/2").unwrap();
        let b = Tableau::parse_columns(&l, "1,2/3").unwrap();
        assert_eq!(a.join(&a).unwrap(), a);
        assert_eq!(a.meet(&a).unwrap(), a);
        assert_eq!(a.join(&b).unwrap(), Tableau::parse_columns(&l, "1,3/3").unwrap());
        assert_eq!(a.meet(&b).unwrap(), Tableau::parse_columns(&l, "1,2/2").unwrap());
        assert!(!a.leq(&b) && !b.leq(&a));
        assert_eq!(Tableau::minimum(&l).content(), vec![2, 1, 0]);
        assert!(a.join(&Tableau::minimum(&shape("1,1,0"))).is_err());
    }

    #[test]
    fn keys() {
        let l = shape("2,1,1,0");
        assert!(Tableau::parse_columns(&l, "1,2,4/4").unwrap().is_key());
        assert!(!Tableau::parse_columns(&l, "1,2,3/4").unwrap().is_key());
    }

    #[test]
    fn text_rendering() {
        let t = Tableau::parse_columns(&shape("2,1,0"), "1,3/2").unwrap();
        assert_eq!(t.to_string(), "1 2\n3");
    }
}
