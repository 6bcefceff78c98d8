//! Sudden death with one completely quiet qubit.
//!
//! With local fields and gamma_b = 0, qubit B keeps its coherence perfectly
//! (rho12 and rho34 never decay), yet the shared entanglement still dies at
//! a finite time — just later: gamma_a*t_c = 2 ln 2 instead of ln 2 for
//! symmetric noise, or ln(2)/2 for the collective field.
//!
//! ```bash
//! cargo run --example one_sided_noise
//! ```

use esd_lab::{
    concurrence_x_state, esd_time_global, esd_time_local, evolve_local_closed_form,
    evolve_local_x_state, sudden_death_demo, Classification,
};

fn main() {
    let x = sudden_death_demo();

    let global = esd_time_global(&x, 1.0).unwrap().t_c.unwrap();
    let symmetric = esd_time_local(&x, 1.0, 1.0).unwrap().t_c.unwrap();
    let one_sided = esd_time_local(&x, 1.0, 0.0).unwrap();
    assert_eq!(one_sided.classification, Classification::FiniteDeath);

    println!("death time of the same initial state under three noises:");
    println!("  collective field        gamma*t_c   = {global:.8}  (= ln(2)/2)");
    println!("  two equal local fields  gamma*t_c   = {symmetric:.8}  (= ln 2)");
    println!(
        "  qubit A only            gamma_a*t_c = {:.8}  (= 2 ln 2, slower but still finite)",
        one_sided.t_c.unwrap()
    );

    // Qubit B's local coherence is untouched while entanglement dies. The
    // demo state sits on the positivity boundary, so blend in a little of
    // the maximally mixed state before adding a single-qubit coherence.
    let mut rho = x.embed().matrix().scale(0.8) + esd_lab::Mat4::identity().scale(0.05);
    rho[(0, 1)] = esd_lab::C64::new(0.05, 0.0); // give B a single-qubit coherence
    rho[(1, 0)] = esd_lab::C64::new(0.05, 0.0);
    rho[(2, 3)] = esd_lab::C64::new(0.05, 0.0);
    rho[(3, 2)] = esd_lab::C64::new(0.05, 0.0);
    let rho = esd_lab::DensityMatrix::new(rho).unwrap();

    println!("\ngamma_a*t   concurrence   |rho12| (B coherence)   |rho14|");
    for i in 0..=8 {
        let t = 0.25 * i as f64;
        let moved = evolve_local_closed_form(&rho, t, 1.0, 0.0).unwrap();
        let x_t = evolve_local_x_state(&x, t, 1.0, 0.0).unwrap();
        println!(
            "{t:>8.2}    {:>11.8}   {:>21.8}   {:.8}",
            concurrence_x_state(&x_t).value,
            moved.matrix()[(0, 1)].norm(),
            moved.matrix()[(0, 3)].norm(),
        );
    }
    println!("\nentanglement decay and local-coherence decay are different things:");
    println!("B never dephases, A only dephases asymptotically, the pair still disentangles.");
}
