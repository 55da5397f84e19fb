//! Shared inputs for the criterion benches.

use franklin_core::{fixture, generate_most_perfect, theta, GeneratorConfig, Grid, TypeParams};

/// A named square with the parameters it is checked under.
pub struct Workload {
    pub name: String,
    pub grid: Grid,
    pub params: TypeParams,
}

/// The embedded fixtures plus `θ(R)` for generated most-perfect squares of the given
/// `(p, r)` pairs.
pub fn workloads(generated: &[(usize, u32)]) -> Vec<Workload> {
    let mut out: Vec<Workload> = ["figure1_franklin8", "figure2_mp9", "sec14_franklin27"]
        .into_iter()
        .map(|name| {
            let f = fixture(name).expect("embedded fixture");
            Workload {
                name: name.to_string(),
                grid: f.square.into_grid(),
                params: f.params,
            }
        })
        .collect();
    for &(p, r) in generated {
        let params = TypeParams::prime_power(p, r).expect("valid order");
        let square = generate_most_perfect(&GeneratorConfig::new(p, r, 0)).expect("generator");
        out.push(Workload {
            name: format!("theta_p{p}_n{}", params.n()),
            grid: theta(square.grid(), &params).expect("theta"),
            params,
        });
    }
    out
}
