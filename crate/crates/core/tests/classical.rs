//! With trivial twisting every construction must collapse to the ordinary Hopf-algebra one.

#[path = "support/cyclic.rs"]
mod cyclic;

#[test]
fn hopf_structure_is_classical() {
    cyclic::hopf_structure().unwrap();
}

#[test]
fn crossed_products_match() {
    cyclic::crossed_products().unwrap();
}

#[test]
fn gamma_inverse_matches() {
    cyclic::gamma_inverses().unwrap();
}

#[test]
fn cleft_data_of_kg_recovers_the_classical_cocycle() {
    cyclic::cleft_cocycles().unwrap();
}

#[test]
fn galois_map_matches() {
    cyclic::galois_maps().unwrap();
}
