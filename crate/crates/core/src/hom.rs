//! Homomorphisms given by generator assignments.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::presentation::Presentation;
use crate::word::Word;

/// Image of a word under the assignment sending generator `i` to
/// `target_images[i]`.
pub fn evaluate_hom(target_images: &[Permutation], w: &Word) -> Permutation {
    let degree = target_images.first().map(Permutation::degree).unwrap_or(1);
    let mut acc = Permutation::identity(degree);
    for &l in w.letters() {
        let idx = l.unsigned_abs() as usize - 1;
        let img = &target_images[idx];
        if l > 0 {
            acc = acc.compose(img);
        } else {
            acc = acc.compose(&img.inverse());
        }
    }
    acc
}

/// Checks that the assignment extends to a homomorphism of the presented
/// group: every relator must map to the identity permutation.
pub fn validate_hom(p: &Presentation, target_images: &[Permutation]) -> Result<()> {
    assert_eq!(p.generator_count, target_images.len());
    for r in &p.relators {
        if !evaluate_hom(target_images, r).is_identity() {
            return Err(Error::RelatorViolation {
                relator: r.display(&p.names).to_string(),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_group;

    #[test]
    fn identity_word_maps_to_identity() {
        let swap = Permutation::from_images(vec![1, 0]).unwrap();
        assert!(evaluate_hom(&[swap], &Word::identity()).is_identity());
    }

    #[test]
    fn validation_accepts_and_rejects() {
        let g = parse_group("gens: a\nrel: a^2").unwrap();
        let swap = Permutation::from_images(vec![1, 0]).unwrap();
        assert!(validate_hom(&g.presentation, &[swap]).is_ok());
        let three = Permutation::from_images(vec![1, 2, 0]).unwrap();
        assert!(matches!(
            validate_hom(&g.presentation, &[three]),
            Err(Error::RelatorViolation { .. })
        ));
    }
}
