//! Indexing layer: subsets of `[n]`, compositions, cd-words, and interval
//! families with their blocking families.

mod composition;
mod interval;
mod subset;
mod word;

pub use composition::Composition;
pub use interval::IntervalFamily;
pub use subset::{Subset, MAX_AMBIENT};
pub use word::{cd_words, fibonacci, CdWord, Letter};
