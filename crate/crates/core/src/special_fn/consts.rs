//! Named constants at full binary64 precision.

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082_402_43;
pub const ZETA2: f64 = 1.644_934_066_848_226_436_472_415_166_646_025_19;
pub const ZETA3: f64 = 1.202_056_903_159_594_285_399_738_161_511_449_99;
pub const ZETA4: f64 = 1.082_323_233_711_138_191_516_003_696_541_167_90;
pub const LN_2: f64 = std::f64::consts::LN_2;
pub const LN_PI: f64 = 1.144_729_885_849_400_174_143_427_351_353_058_71;
pub const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_741_780_329_736_405_617_64;
pub const SQRT_PI: f64 = 1.772_453_850_905_516_027_298_167_483_341_145_18;

/// Even-index Bernoulli numbers B_2, B_4, ..., B_30.
pub const BERNOULLI_EVEN: [f64; 15] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

/// B_{2k} for k >= 1.
#[inline]
pub fn bernoulli_even(k: usize) -> f64 {
    BERNOULLI_EVEN[k - 1]
}

/// Exact k! as binary64 (exact for k <= 22).
pub fn factorial(k: u32) -> f64 {
    (1..=k).fold(1.0, |acc, i| acc * i as f64)
}

/// Binomial coefficient C(n, k) for small integers, by the multiplicative formula.
pub fn binomial_int(n: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc.round()
}
