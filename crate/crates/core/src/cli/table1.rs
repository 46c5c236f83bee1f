//! Published reference phase-shift columns (a = b = 0.15, E = 1) for the
//! equal-mass (mu = 0.5) and unequal-mass (mu = 0.99) setups, l = 0..20.
//! The screening parameter used to produce them was not published; the
//! beta-scan command searches for the closest match.

pub const L_MAX: usize = 20;

pub const EQUAL: [f64; 21] = [
    -3.20116, -0.48696, 3.94288, 1.44838, -1.48742, -4.77575, -8.36940, -12.23144, -16.33226,
    -20.64778, -25.15815, -29.84674, -34.69945, -39.70422, -44.85058, -50.12941, -55.53264,
    -61.05314, -66.68454, -72.42109, -78.25764,
];

pub const UNEQUAL: [f64; 21] = [
    -10.14667, -8.03766, -2.55423, 5.13545, 1.52129, -2.18885, -6.07785, -10.16280, -14.43993,
    -18.89947, -23.53029, -28.32149, -33.26291, -38.34528, -43.56023, -48.90018, -54.35831,
    -59.92842, -65.60491, -71.38266, -77.25701,
];
