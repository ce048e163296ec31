//! The Artin action of `B_n` on the free group `F_n = ⟨x_1, …, x_n⟩`.
//!
//! `s_i` acts by `x_i ↦ x_i x_{i+1} x_i⁻¹`, `x_{i+1} ↦ x_i`, fixing the other
//! generators. The action is faithful, so a braid is trivial exactly when it
//! fixes every generator.

/// A freely reduced word in the free group; `+k` is `x_k`, `-k` is `x_k⁻¹`.
pub type FreeWord = Vec<i32>;

fn push_reduced(out: &mut FreeWord, g: i32) {
    if out.last() == Some(&-g) {
        out.pop();
    } else {
        out.push(g);
    }
}

fn concat(parts: &[&[i32]]) -> FreeWord {
    let mut out = Vec::with_capacity(parts.iter().map(|p| p.len()).sum());
    for p in parts {
        for &g in *p {
            push_reduced(&mut out, g);
        }
    }
    out
}

fn inverse(w: &[i32]) -> FreeWord {
    w.iter().rev().map(|g| -g).collect()
}

/// Images of `x_1, …, x_n` under the automorphism of the word `letters`.
pub fn artin_images(strands: usize, letters: &[i32]) -> Vec<FreeWord> {
    let mut img: Vec<FreeWord> = (1..=strands as i32).map(|g| vec![g]).collect();
    for &l in letters {
        let i = l.unsigned_abs() as usize - 1;
        let (a, b) = (img[i].clone(), img[i + 1].clone());
        if l > 0 {
            img[i] = concat(&[&a, &b, &inverse(&a)]);
            img[i + 1] = a;
        } else {
            img[i] = b.clone();
            img[i + 1] = concat(&[&inverse(&b), &a, &b]);
        }
    }
    img
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_and_inverse_cancel() {
        let id: Vec<FreeWord> = (1..=3).map(|g| vec![g]).collect();
        assert_eq!(artin_images(3, &[2, -2]), id);
        assert_eq!(artin_images(3, &[-1, 1]), id);
        assert_ne!(artin_images(3, &[1]), id);
    }

    #[test]
    fn braid_relation_holds() {
        assert_eq!(artin_images(3, &[1, 2, 1]), artin_images(3, &[2, 1, 2]));
        assert_eq!(artin_images(4, &[1, 3]), artin_images(4, &[3, 1]));
    }

    #[test]
    fn product_of_images_is_fixed() {
        // x_1 x_2 ⋯ x_n is fixed by every braid
        let img = artin_images(4, &[1, -2, 3, 3, -1, 2]);
        let prod: Vec<&[i32]> = img.iter().map(|w| w.as_slice()).collect();
        assert_eq!(concat(&prod), vec![1, 2, 3, 4]);
    }
}
