//! Standard two-qubit states and Pauli matrices.

use num_complex::Complex64;

use crate::linalg::MatrixC;

fn projector(v: &[f64]) -> MatrixC {
    let n = v.len();
    let mut m = MatrixC::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = Complex64::new(v[i] * v[j], 0.0);
        }
    }
    m
}

/// `|φ⁺⟩⟨φ⁺|` with `|φ⁺⟩ = (|00⟩ + |11⟩)/√2`.
pub fn bell_phi_plus() -> MatrixC {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    projector(&[h, 0.0, 0.0, h])
}

/// `|ψ⁻⟩⟨ψ⁻|` with `|ψ⁻⟩ = (|01⟩ − |10⟩)/√2`.
pub fn bell_psi_minus() -> MatrixC {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    projector(&[0.0, h, -h, 0.0])
}

/// `p·|ψ⁻⟩⟨ψ⁻| + (1 − p)·I/4`.
pub fn werner(p: f64) -> MatrixC {
    &bell_psi_minus().scale(p) + &MatrixC::identity(4).scale((1.0 - p) / 4.0)
}

pub fn pauli_x() -> MatrixC {
    MatrixC::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]])
}

pub fn pauli_y() -> MatrixC {
    let i = Complex64::new(0.0, 1.0);
    let z = Complex64::new(0.0, 0.0);
    MatrixC::from_rows(&[&[z, -i], &[i, z]])
}

pub fn pauli_z() -> MatrixC {
    MatrixC::from_diag(&[1.0, -1.0])
}
