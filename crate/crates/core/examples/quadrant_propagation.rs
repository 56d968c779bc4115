//! Inspects the Bloch generator of one quadrant: its eigenvalues, the mode
//! amplitudes and the decay of a Bloch vector.

use nalgebra::Vector3;
use spinflavour::lindblad::{DissipatorSpec, GeneratorForm, PropagatorM};
use spinflavour::linalg::C64;
use spinflavour::params::DimensionlessParams;

fn main() {
    let p = DimensionlessParams::default();
    let pm = PropagatorM::new(p.omega_b_bar, &DissipatorSpec::reduced(p.beta), GeneratorForm::MasterEquation);
    println!("M ={}", pm.m);
    for (k, nu) in pm.nu.iter().enumerate() {
        println!("nu_{} = {:+.6} {:+.6}i", k + 1, nu.re, nu.im);
    }

    let r0 = Vector3::new(C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(0.5, 0.0));
    let k = pm.constants(&r0);
    for (i, c) in k.c.iter().enumerate() {
        println!("C_{} = [{:+.4}, {:+.4}, {:+.4}]", i + 1, c[0], c[1], c[2]);
    }
    for tau in [0.0, 0.5, 1.0, 2.0, 5.0, 10.0] {
        let r = pm.apply(&r0, tau);
        println!("tau {tau:5.1}  |r| = {:.6}", r.norm());
    }
}
