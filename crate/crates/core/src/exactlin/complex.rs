//! Finite chain complexes and their homology.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::elimination::rank;
use super::{smith_normal_form, LinError, Ring, Scalar, SparseMatrix};

/// Homology in a single degree: free rank plus invariant factors above 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

/// One row of a homology table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyRecord {
    pub degree: i64,
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

/// Homology of a complex, one record per degree in which chains exist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologySummary {
    pub ring: Ring,
    pub records: Vec<HomologyRecord>,
}

impl HomologySummary {
    pub fn group(&self, degree: i64) -> HomologyGroup {
        self.records
            .iter()
            .find(|r| r.degree == degree)
            .map(|r| HomologyGroup {
                free_rank: r.free_rank,
                torsion: r.torsion.clone(),
            })
            .unwrap_or(HomologyGroup {
                free_rank: 0,
                torsion: Vec::new(),
            })
    }

    /// Nonzero free ranks by degree.
    pub fn ranks(&self) -> BTreeMap<i64, usize> {
        self.records
            .iter()
            .filter(|r| r.free_rank > 0)
            .map(|r| (r.degree, r.free_rank))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.records
            .iter()
            .all(|r| r.free_rank == 0 && r.torsion.is_empty())
    }

    pub fn has_torsion(&self) -> bool {
        self.records.iter().any(|r| !r.torsion.is_empty())
    }
}

fn integer_rank(m: &SparseMatrix) -> Result<usize, LinError> {
    rank(&m.change_ring(Ring::Rationals))
}

/// Homology at the middle of `C_{k+1} --d_in--> C_k --d_out--> C_{k-1}`.
///
/// `d_in` has shape `dim C_k x dim C_{k+1}` and `d_out` has shape
/// `dim C_{k-1} x dim C_k`. Fails if `d_out * d_in` is nonzero.
pub fn chain_homology(
    d_in: &SparseMatrix,
    d_out: &SparseMatrix,
    ring: Ring,
) -> Result<HomologyGroup, LinError> {
    for m in [d_in, d_out] {
        if m.ring() != ring {
            return Err(LinError::RingMismatch(m.ring(), ring));
        }
    }
    if d_in.rows() != d_out.cols() {
        return Err(LinError::Dimension(format!(
            "incoming differential lands in rank {} but outgoing starts from rank {}",
            d_in.rows(),
            d_out.cols()
        )));
    }
    let comp = d_out.mul(d_in)?;
    if !comp.is_zero() {
        return Err(LinError::CompositionNonzero { nonzero: comp.nnz() });
    }
    let dim = d_in.rows();
    match ring {
        Ring::Integers => {
            let factors = smith_normal_form(d_in)?;
            let rank_in = factors.len();
            let rank_out = integer_rank(d_out)?;
            Ok(HomologyGroup {
                free_rank: dim - rank_out - rank_in,
                torsion: factors.into_iter().filter(|d| !d.is_one()).collect(),
            })
        }
        _ => Ok(HomologyGroup {
            free_rank: dim - rank(d_out)? - rank(d_in)?,
            torsion: Vec::new(),
        }),
    }
}

/// A bounded chain complex; `diffs[k]` maps degree `k` to degree `k - 1`.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub ring: Ring,
    pub dims: BTreeMap<i64, usize>,
    pub diffs: BTreeMap<i64, SparseMatrix>,
}

impl ChainComplex {
    pub fn new(ring: Ring) -> ChainComplex {
        ChainComplex {
            ring,
            dims: BTreeMap::new(),
            diffs: BTreeMap::new(),
        }
    }

    pub fn dim(&self, k: i64) -> usize {
        self.dims.get(&k).copied().unwrap_or(0)
    }

    /// The differential leaving degree `k` (a zero matrix when absent).
    pub fn differential(&self, k: i64) -> SparseMatrix {
        self.diffs.get(&k).cloned().unwrap_or_else(|| {
            SparseMatrix::zeros(self.ring, self.dim(k - 1), self.dim(k))
        })
    }

    /// Reduces an integral complex to another ring.
    pub fn change_ring(&self, ring: Ring) -> ChainComplex {
        ChainComplex {
            ring,
            dims: self.dims.clone(),
            diffs: self
                .diffs
                .iter()
                .map(|(k, m)| (*k, m.change_ring(ring)))
                .collect(),
        }
    }

    /// Checks that all consecutive composites vanish.
    pub fn check_square_zero(&self) -> Result<(), LinError> {
        for &k in self.dims.keys() {
            let c = self.differential(k - 1).mul(&self.differential(k))?;
            if !c.is_zero() {
                return Err(LinError::CompositionNonzero { nonzero: c.nnz() });
            }
        }
        Ok(())
    }

    pub fn homology(&self) -> Result<HomologySummary, LinError> {
        let mut records = Vec::new();
        for (&k, &dim) in &self.dims {
            if dim == 0 {
                continue;
            }
            let g = chain_homology(&self.differential(k + 1), &self.differential(k), self.ring)?;
            records.push(HomologyRecord {
                degree: k,
                free_rank: g.free_rank,
                torsion: g.torsion,
            });
        }
        Ok(HomologySummary {
            ring: self.ring,
            records,
        })
    }
}

/// Universal coefficients: the F_p homology predicted from integral homology
/// is `free_rank(k) + #{p | t in torsion(k)} + #{p | t in torsion(k-1)}`.
pub fn uct_consistent(integral: &HomologySummary, modp: &HomologySummary, p: u64) -> bool {
    let degrees: std::collections::BTreeSet<i64> = integral
        .records
        .iter()
        .chain(modp.records.iter())
        .map(|r| r.degree)
        .collect();
    let divisible = |g: &HomologyGroup| g.torsion.iter().filter(|t| (*t % p).is_zero()).count();
    degrees.into_iter().all(|k| {
        let hz = integral.group(k);
        let prev = integral.group(k - 1);
        modp.group(k).free_rank == hz.free_rank + divisible(&hz) + divisible(&prev)
    })
}

/// Whether the cycles `zs` generate the integral homology group at
/// `C_{k+1} --d_in--> C_k --d_out--> C_{k-1}`.
///
/// Checks that each `z` is a cycle and that `ker d_out / (im d_in + <zs>)`
/// vanishes, by comparing ranks and the torsion of the enlarged boundary
/// lattice. Works over Z and over fields.
pub fn class_generates(
    zs: &[BTreeMap<usize, i64>],
    d_in: &SparseMatrix,
    d_out: &SparseMatrix,
) -> Result<bool, LinError> {
    let ring = d_in.ring();
    let dim = d_in.rows();
    let mut zmat = SparseMatrix::zeros(ring, dim, zs.len());
    for (j, z) in zs.iter().enumerate() {
        for (&i, &v) in z {
            zmat.add_to(i, j, &Scalar::from_i64(ring, v));
        }
    }
    if !d_out.mul(&zmat)?.is_zero() {
        return Ok(false);
    }
    let stacked = d_in.hstack(&zmat)?;
    let cycle_rank = dim
        - match ring {
            Ring::Integers => integer_rank(d_out)?,
            _ => rank(d_out)?,
        };
    match ring {
        Ring::Integers => {
            let f = smith_normal_form(&stacked)?;
            Ok(f.len() == cycle_rank && f.iter().all(|d| d.is_one() || d.is_zero()))
        }
        _ => Ok(rank(&stacked)? == cycle_rank),
    }
}
