macro_rules! example {
    ($module:ident, $file:literal, $test:ident) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(norm_report, "norm_report.rs", norm_report_runs);
example!(verify_theorems, "verify_theorems.rs", verify_theorems_runs);
example!(prop_one, "prop_one.rs", prop_one_runs);
example!(identities, "identities.rs", identities_runs);
example!(monte_carlo, "monte_carlo.rs", monte_carlo_runs);
example!(convergence_scan, "convergence_scan.rs", convergence_scan_runs);
example!(extremal_search, "extremal_search.rs", extremal_search_runs);
example!(quadrature_crosscheck, "quadrature_crosscheck.rs", quadrature_crosscheck_runs);
