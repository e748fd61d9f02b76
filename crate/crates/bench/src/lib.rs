//! Fixed inputs shared by the benchmarks in `benches/`.

use qqmod_core::gauss_series::parse_series;
use qqmod_core::oracle::{axiom_pairs, char2_catalog, module_catalog, Sampler};
use qqmod_core::{Char2Module, DyadicSeries, QQModule, Series};

pub fn series(text: &str, precision: u32) -> Series {
    parse_series(text, Some(precision)).expect("fixture series parse")
}

/// A strict unit with every coefficient up to `precision` filled in.
pub fn dense_unit(precision: u32) -> Series {
    let terms: Vec<String> = (1..precision).map(|k| format!("({k}/{}+{}i)X^{k}", k + 1, k % 3)).collect();
    series(&format!("1 + {}", terms.join(" + ")), precision)
}

pub fn module_pairs(n: usize) -> Vec<(QQModule, QQModule)> {
    let cat = module_catalog();
    let mut rng = Sampler::new(1, 4);
    (0..n).map(|_| (*rng.pick(&cat), *rng.pick(&cat))).collect()
}

pub fn probes(n: usize) -> Vec<Series> {
    let mut rng = Sampler::new(2, 5);
    (0..n).map(|_| rng.probe_series(4, 3)).collect()
}

pub fn pairs(n: usize) -> Vec<(Series, Series)> {
    axiom_pairs(3, n)
}

pub fn char2_modules() -> Vec<Char2Module> {
    char2_catalog()
}

pub fn maximal_ideal_elements(n: usize) -> Vec<DyadicSeries> {
    let mut rng = Sampler::new(4, 5);
    (0..n).map(|_| rng.dyadic_maximal()).collect()
}
