//! Objects and morphisms of `C_{v,w} = C_w ∩ C^v`.

use rand::RngCore;

use super::Preprojective;
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::modcat::{Module, ModuleMap};
use crate::weyl::WeylElement;

/// Whether `I_w X = X` and `I_v X = 0`.
pub fn is_member<F: Field>(pi: &Preprojective<F>, v: &WeylElement, w: &WeylElement, x: &Module<F>) -> Result<bool> {
    Ok(pi.in_torsion_class(w, x)? && pi.in_torsion_free_class(v, x)?)
}

/// `t_w f_v (Pi^k / U)` with `U` generated by `gens` random vectors.
pub fn random_member<F: Field>(
    pi: &Preprojective<F>,
    v: &WeylElement,
    w: &WeylElement,
    k: usize,
    gens: usize,
    rng: &mut dyn RngCore,
) -> Result<Module<F>> {
    let f = pi.field();
    let free = pi.regular().power(k);
    let vecs: Vec<Vec<F::Elem>> = (0..gens).map(|_| (0..free.dim()).map(|_| f.random(rng)).collect()).collect();
    let (x, _) = free.quotient(&free.generated_submodule(&vecs))?;
    let (fx, _) = pi.torsion_free(v, &x)?;
    Ok(pi.torsion(w, &fx)?.0)
}

/// Kernel and cokernel of a morphism inside `C_{v,w}`.
#[derive(Clone, Debug)]
pub struct KernelCokernel<F: Field> {
    /// `t_w(ker f)`.
    pub kernel: Module<F>,
    /// `kernel -> X`.
    pub kernel_inclusion: Matrix<F>,
    /// `f_v(coker f)`.
    pub cokernel: Module<F>,
    /// `Y -> cokernel`.
    pub cokernel_projection: Matrix<F>,
}

impl<F: Field> KernelCokernel<F> {
    /// Solves `inclusion h = g`; `None` if `g` does not factor.
    pub fn factor_through_kernel(&self, g: &Matrix<F>) -> Option<Matrix<F>> {
        let l = self.kernel_inclusion.left_inverse()?;
        let h = l.mul(g);
        (self.kernel_inclusion.mul(&h) == *g).then_some(h)
    }
}

pub fn kernel_cokernel_in_c<F: Field>(
    pi: &Preprojective<F>,
    v: &WeylElement,
    w: &WeylElement,
    map: &ModuleMap<F>,
) -> Result<KernelCokernel<F>> {
    for (name, m) in [("source", &map.source), ("target", &map.target)] {
        if !is_member(pi, v, w, m)? {
            return Err(Error::MembershipViolated(name.into()));
        }
    }
    let x = &map.source;
    let y = &map.target;
    let (k, k_incl) = x.submodule(&map.kernel())?;
    let (kernel, t_incl) = pi.torsion(w, &k)?;
    let (c, c_proj) = y.quotient(&map.image())?;
    let (cokernel, f_proj) = pi.torsion_free(v, &c)?;
    Ok(KernelCokernel {
        kernel,
        kernel_inclusion: k_incl.mul(&t_incl),
        cokernel,
        cokernel_projection: f_proj.mul(&c_proj),
    })
}

/// `Phi(M)`, the `psi`-twist of the vector space dual.
pub fn duality_phi<F: Field>(pi: &Preprojective<F>, m: &Module<F>) -> Result<Module<F>> {
    pi.phi(m)
}

/// `t_w f_v (D Pi)`, the Ext-injective objects of `C_{v,w}`.
pub fn injectives_of_c<F: Field>(pi: &Preprojective<F>, v: &WeylElement, w: &WeylElement) -> Result<Module<F>> {
    let (f, _) = pi.torsion_free(v, &pi.dual_regular()?)?;
    Ok(pi.torsion(w, &f)?.0)
}
