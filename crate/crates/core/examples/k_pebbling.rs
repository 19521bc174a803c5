//! k-pebbling numbers of small stars against `4k + m - 3`.

use pebbling::bounds::star_k_pebbling_number;
use pebbling::family::Family;
use pebbling::pebbling::{pebbling_number, SearchBudget};

fn main() {
    let budget = SearchBudget::default();
    println!(" m  k  exact  4k+m-3");
    for m in 3..=6u32 {
        let g = Family::Star(m as usize - 1).generate().unwrap();
        for k in 1..=4 {
            let exact = pebbling_number(&g, k, &budget).unwrap().value;
            println!("{m:>2} {k:>2} {exact:>6} {:>7}", star_k_pebbling_number(k, m).unwrap());
        }
    }
}
