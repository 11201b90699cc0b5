//! A short tour: build a member of the dihedral example family, run its
//! identity suite and theorem checks, then enumerate every left bracoid on
//! the same carrier up to isomorphism.
//!
//! Run with `cargo run --release -p bracoid-core --example family_tour`.

use bracoid_core::enumerate::{enumerate_left_bracoids, Caps};
use bracoid_core::family::dihedral_family;
use bracoid_core::{FamilyParams, FiniteGroup};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // G = GT3 (order 12) and H = HW3 (order 12) acting on N = D3 (order 6)
    // from the two sides.
    let fam = dihedral_family(&FamilyParams { t: 3, w: 3, d: 3 })?;
    let suite = fam.identity_suite();
    println!(
        "family member (3, 3, 3): |G| = {}, |H| = {}, |N| = {}, {} identity checks passed",
        fam.left_actor().order(),
        fam.right_actor().order(),
        fam.space().order(),
        suite.checks.len(),
    );
    assert!(suite.all_passed());

    // D3 is non-abelian, so the abelian-space structure theorem does not
    // apply; the beta-expansion rule needs no commutativity and must hold.
    let maps = fam.check_structure_maps();
    println!("structure-map theorem on non-abelian N: {}", maps.flag.as_str());

    // Exhaustive enumeration on the same actor and space, deduplicated up
    // to isomorphism.
    let g = FiniteGroup::cyclic_semidirect_c4(3)?; // GT3
    let n = FiniteGroup::dihedral(3)?; // D3
    let found = enumerate_left_bracoids(&g, &n, &Caps::default(), true)?;
    println!(
        "left bracoids of GT3 on D3: {} structures, {} isomorphism classes",
        found.raw_count,
        found.iso_class_count.expect("deduplication ran"),
    );
    Ok(())
}
