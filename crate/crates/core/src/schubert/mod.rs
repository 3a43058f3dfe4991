//! Permutations, Rothe diagrams, reduced words and principal evaluations
//! of Schubert polynomials.

pub mod families;
pub mod perm;
pub mod upsilon;
pub mod words;

pub use families::{family, upsilon_closed_form, upsilon_dominant, Family};
pub use perm::{
    a_reduced_word, classify, reduced_words, reduced_words_iter, rothe_diagram, vexillary_shapes, word_to_perm,
    Classification, PermDiagram, Permutation, ReducedWords, REDUCED_WORD_CAP,
};
pub use upsilon::{upsilon, upsilon_by_words, upsilon_shifted, UpsilonMethod};
pub use words::{normalize_skew, reading_word, shape_perm_correspondence, skewsh};
