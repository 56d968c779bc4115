//! Moves a flavour-basis state into the mass and B bases and back.

use spinflavour::basis::{change_basis, BasisTag, DensityMatrix4, Flavour, Helicity, SpinFlavourIndex};
use spinflavour::hamiltonian::{flavour_hamiltonian, transforms};
use spinflavour::linalg::max_abs_diff;
use spinflavour::params::DimensionlessParams;

fn main() -> spinflavour::Result<()> {
    let c = DimensionlessParams::default().couplings();
    let t = transforms(&c)?;
    let rho = DensityMatrix4::pure(SpinFlavourIndex::new(Flavour::E, Helicity::R));

    for tag in [BasisTag::Mass, BasisTag::BEigen] {
        let moved = change_basis(&rho, tag, &t);
        let back = change_basis(&moved, BasisTag::Flavour, &t);
        println!("{tag:?}:{}", moved.entries().map(|z| z.re));
        println!("round trip error {:.2e}", max_abs_diff(back.entries(), rho.entries()));
    }

    // the flavour Hamiltonian is diagonal in the B basis
    let hb = flavour_hamiltonian(&c).in_basis(BasisTag::BEigen, &t);
    println!("H in B basis:{}", hb.matrix);
    Ok(())
}
