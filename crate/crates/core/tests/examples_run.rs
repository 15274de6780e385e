//! Runs every program in `examples/` so they stay working.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!("../examples/", stringify!($name), ".rs"));

            #[test]
            fn runs() {
                main();
            }
        }
    };
}

example!(normal_form);
example!(right_complement);
example!(summit_set);
example!(conjugacy);
example!(genus);
example!(unknotting);
example!(witness);
example!(classify);
example!(oracle);
example!(batch);
example!(corpus);
