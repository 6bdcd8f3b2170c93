mod kernel;

use kernel::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn s_polynomials_vanish(specs in generator_specs(), order in orders()) {
        s_polynomials_reduce_to_zero(&specs, order)?;
    }

    #[test]
    fn generator_order_is_irrelevant(specs in generator_specs(), shift in 0usize..6) {
        reduced_basis_ignores_generator_order(&specs, shift)?;
    }

    #[test]
    fn ordinary_in_symbolic(coords in point_coords(), factors in combinations()) {
        ordinary_powers_lie_in_symbolic_powers(&coords, &factors)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rationals(v in rational_triples()) {
        rational_axioms(v)?;
    }

    #[test]
    fn cyclotomics((n, v) in cyclotomic_inputs()) {
        cyclotomic_axioms(n, v)?;
    }

    #[test]
    fn primes((p, v) in prime_inputs()) {
        prime_axioms(p, v)?;
    }

    #[test]
    fn extensions((k, v) in extension_inputs()) {
        extension_axioms(k, v)?;
    }

    #[test]
    fn print_parse((spec, n) in printable_inputs()) {
        printed_polynomials_parse_back(&spec, n)?;
    }
}
