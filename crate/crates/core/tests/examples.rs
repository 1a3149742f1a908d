macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!("../examples/", stringify!($name), ".rs"));
        }

        #[test]
        fn $name() {
            $name::run().unwrap();
        }
    };
}

example!(words);
example!(small_cancellation);
example!(dehn_solver);
example!(separation);
example!(density);
example!(zero_semigroup);
example!(generic_presentation);
