//! Milnor invariants of link diagrams: Magnus expansion, longitudes, μ̄,
//! and link-homotopy tests.

mod homotopy;
mod longitude;
mod magnus;
mod mu;
mod word;

pub use homotopy::{is_homotopically_trivial, is_ht_plus_pair, resolve_labels, HomotopyVerdict, PairVerdict};
pub use longitude::{longitude_series, longitude_words};
pub use magnus::{magnus_expand, MagnusSeries};
pub use mu::{mu_bar, non_repeating, non_repeating_table, Longitudes, MuEntry, MuTable};
pub use word::Word;
