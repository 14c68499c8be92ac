//! Inputs shared by the benchmarks.

use eulersign_core::{PermGroup, Permutation};

/// `S_m` wreath `C_2` in product action on `m^2` points.
pub fn wreath_product_action(m: u32) -> PermGroup {
    let n = (m * m) as usize;
    let point = |a: u32, b: u32| b * m + a;
    let on_first = |cycle: &dyn Fn(u32) -> u32| {
        let v = (0..n as u32).map(|p| point(cycle(p % m), p / m)).collect();
        Permutation::from_images(v).unwrap()
    };
    let shift = on_first(&|a| (a + 1) % m);
    let swap = on_first(&|a| if a < 2 { 1 - a } else { a });
    let flip = Permutation::from_images((0..n as u32).map(|p| point(p / m, p % m)).collect()).unwrap();
    PermGroup::new(n, vec![shift, swap, flip]).unwrap()
}

/// `PSL(2, 7)` on the seven points of the Fano plane.
pub fn psl27() -> PermGroup {
    let gens = vec![
        Permutation::from_images(vec![1, 2, 3, 4, 5, 6, 0]).unwrap(),
        Permutation::from_images(vec![0, 1, 4, 3, 2, 6, 5]).unwrap(),
    ];
    PermGroup::new(7, gens).unwrap()
}
