//! Assembly of the dense symmetric eigenproblem matrix.
//!
//! D_ab = (kinetic eigenvalue of a)·δ_ab + C_ab. For even potentials in
//! periodic mode the cosine and sine sectors decouple; the two parity
//! blocks are extracted at assembly time so the eigensolver can work on two
//! half-size problems.

use crate::basis::{BasisSpec, BoundaryMode, Parity};
use crate::error::{Result, VismError};
use crate::matrix::DenseMatrix;
use crate::numeric::PrecisionContext;
use crate::potential::{assemble_coupling, PotentialSpec};
use std::io::Write;

/// The two decoupled parity sectors of an even periodic problem, with maps
/// from block positions back to flat basis indices.
#[derive(Clone, Debug)]
pub struct ParityBlocks {
    pub even: DenseMatrix,
    pub odd: DenseMatrix,
    pub even_map: Vec<usize>,
    pub odd_map: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct HamiltonianMatrix {
    spec: BasisSpec,
    pot: PotentialSpec,
    matrix: DenseMatrix,
    blocks: Option<ParityBlocks>,
}

/// Build D for the given basis and potential. Parity blocks are computed
/// iff the potential is even and the mode is periodic.
pub fn assemble(
    spec: &BasisSpec,
    pot: &PotentialSpec,
    ctx: &PrecisionContext,
) -> Result<HamiltonianMatrix> {
    let coupling = assemble_coupling(spec, pot, ctx)?;
    let n = spec.size();
    let mut matrix = coupling.0;
    for flat in 0..n {
        let idx = spec.index(flat)?;
        let kin = crate::basis::kinetic_eigenvalue(spec, &idx)?;
        let d = matrix.get(flat, flat) + &kin;
        matrix.set(flat, flat, d);
    }
    let blocks = if pot.is_even() && spec.mode() == BoundaryMode::Periodic {
        Some(extract_blocks(spec, &matrix))
    } else {
        None
    };
    Ok(HamiltonianMatrix {
        spec: spec.clone(),
        pot: pot.clone(),
        matrix,
        blocks,
    })
}

fn extract_blocks(spec: &BasisSpec, matrix: &DenseMatrix) -> ParityBlocks {
    let mut even_map = Vec::new();
    let mut odd_map = Vec::new();
    for idx in spec.indices() {
        match spec.parity(&idx) {
            Some(Parity::Even) => even_map.push(idx.flat),
            Some(Parity::Odd) => odd_map.push(idx.flat),
            None => unreachable!("periodic indices always carry parity"),
        }
    }
    let even = DenseMatrix::from_fn(even_map.len(), |i, j| {
        matrix.get(even_map[i], even_map[j]).clone()
    });
    let odd = DenseMatrix::from_fn(odd_map.len(), |i, j| {
        matrix.get(odd_map[i], odd_map[j]).clone()
    });
    ParityBlocks {
        even,
        odd,
        even_map,
        odd_map,
    }
}

impl HamiltonianMatrix {
    pub fn spec(&self) -> &BasisSpec {
        &self.spec
    }

    pub fn potential(&self) -> &PotentialSpec {
        &self.pot
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.matrix
    }

    pub fn blocks(&self) -> Option<&ParityBlocks> {
        self.blocks.as_ref()
    }

    /// The cosine-cosine and sine-sine sub-matrices with their index maps.
    ///
    /// Verifies that every cross-parity entry is negligible at the given
    /// precision before handing the blocks out.
    pub fn parity_blocks(&self, ctx: &PrecisionContext) -> Result<&ParityBlocks> {
        let blocks = self.blocks.as_ref().ok_or(VismError::BlocksUnavailable(
            "parity blocks exist only for even potentials in periodic mode",
        ))?;
        let tol = ctx.pow10(-(ctx.digits() as i32 - 10));
        let scale = self.matrix.max_abs().max(&ctx.one());
        let bound = &tol * &scale;
        for &a in &blocks.even_map {
            for &b in &blocks.odd_map {
                let v = self.matrix.get(a, b);
                if v.abs() > bound {
                    return Err(VismError::NotBlockDiagonal {
                        row: a,
                        col: b,
                        value: v.to_decimal_string(3),
                    });
                }
            }
        }
        Ok(blocks)
    }

    /// Decimal-string CSV dump, row-major, for external verification.
    pub fn write_csv(&self, mut w: impl Write, digits: u32) -> std::io::Result<()> {
        let n = self.dim();
        for i in 0..n {
            let row: Vec<String> = (0..n)
                .map(|j| self.matrix.get(i, j).to_decimal_string(digits))
                .collect();
            writeln!(w, "{}", row.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::kinetic_eigenvalue;

    fn ctx(digits: u32) -> PrecisionContext {
        PrecisionContext::new(digits).unwrap()
    }

    #[test]
    fn free_particle_periodic_is_diagonal_kinetic() {
        let c = ctx(30);
        let spec = BasisSpec::periodic(4, c.from_f64(2.5)).unwrap();
        let h = assemble(&spec, &PotentialSpec::zero(), &c).unwrap();
        for a in 0..h.dim() {
            for b in 0..h.dim() {
                if a == b {
                    let want = kinetic_eigenvalue(&spec, &spec.index(a).unwrap()).unwrap();
                    assert_eq!(*h.matrix().get(a, a), want);
                } else {
                    assert!(h.matrix().get(a, b).is_zero());
                }
            }
        }
    }

    #[test]
    fn free_particle_box_diagonal_is_box_spectrum() {
        // the confinement basis diagonalizes the particle in a box exactly
        let c = ctx(30);
        let l = c.from_f64(1.25);
        let spec = BasisSpec::confinement(3, l.clone()).unwrap();
        let h = assemble(&spec, &PotentialSpec::zero(), &c).unwrap();
        for (flat, idx) in spec.indices().enumerate() {
            let want = (&(&c.from_u32(idx.m) * &c.pi()) / &(&c.from_u32(2) * &l)).square();
            let got = h.matrix().get(flat, flat);
            assert!((got - &want).abs() <= &c.working_epsilon() * &want);
        }
    }

    #[test]
    fn sho_block_enumeration() {
        let c = ctx(30);
        let spec = BasisSpec::periodic(3, c.from_u32(4)).unwrap();
        let pot = PotentialSpec::parse("x^2", &c).unwrap();
        let h = assemble(&spec, &pot, &c).unwrap();
        let blocks = h.parity_blocks(&c).unwrap();
        assert_eq!(blocks.even_map, vec![0, 1, 2]); // cosines m = 0, 1, 2
        assert_eq!(blocks.odd_map, vec![3, 4, 5]); // sines m = 1, 2, 3
        assert_eq!(blocks.even.dim(), 3);
        assert_eq!(blocks.odd.dim(), 3);
    }

    #[test]
    fn free_particle_blocks_are_diagonal() {
        let c = ctx(30);
        let spec = BasisSpec::periodic(3, c.from_u32(2)).unwrap();
        let h = assemble(&spec, &PotentialSpec::zero(), &c).unwrap();
        let blocks = h.parity_blocks(&c).unwrap();
        for m in [&blocks.even, &blocks.odd] {
            for i in 0..m.dim() {
                for j in 0..m.dim() {
                    if i != j {
                        assert!(m.get(i, j).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn blocks_absent_for_odd_potential_or_confinement() {
        let c = ctx(30);
        let spec = BasisSpec::periodic(3, c.from_u32(2)).unwrap();
        let odd_pot = PotentialSpec::parse("x^3", &c).unwrap();
        let h = assemble(&spec, &odd_pot, &c).unwrap();
        assert!(h.blocks().is_none());
        assert!(matches!(
            h.parity_blocks(&c),
            Err(VismError::BlocksUnavailable(_))
        ));

        let conf = BasisSpec::confinement(3, c.from_u32(2)).unwrap();
        let pot = PotentialSpec::parse("x^2", &c).unwrap();
        let h = assemble(&conf, &pot, &c).unwrap();
        assert!(h.blocks().is_none());
    }

    #[test]
    fn matrix_is_symmetric() {
        let c = ctx(30);
        let spec = BasisSpec::periodic(4, c.from_f64(3.1)).unwrap();
        let pot = PotentialSpec::parse("x^2 + 0.1*x^4", &c).unwrap();
        let h = assemble(&spec, &pot, &c).unwrap();
        let (_, _, dev) = h.matrix().symmetry_deviation();
        assert!(dev.is_zero());
    }

    #[test]
    fn csv_dump_shape() {
        let c = ctx(30);
        let spec = BasisSpec::periodic(2, c.one()).unwrap();
        let h = assemble(&spec, &PotentialSpec::parse("x^2", &c).unwrap(), &c).unwrap();
        let mut buf = Vec::new();
        h.write_csv(&mut buf, 20).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let rows: Vec<&str> = text.lines().collect();
        assert_eq!(rows.len(), 4);
        assert!(rows.iter().all(|r| r.split(',').count() == 4));
    }
}
