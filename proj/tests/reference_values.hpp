#pragma once

// Reference values frozen from an independent multiprecision computation
// (mpmath, 25 significant digits), quoted here to double precision.
// Nothing in this header is produced by the library under test.

#include <complex>

namespace ref {

using cplx = std::complex<double>;

inline constexpr double kZeta2 = 1.644934066848226436;    // pi^2/6
inline constexpr double kZeta3 = 1.202056903159594285;
inline constexpr double kZeta4 = 1.082323233711138192;
inline constexpr double kZetaHalf = -1.460354508809586813;
inline constexpr double kZeta03 = -0.90455925725398399;
inline constexpr double kZetaMinusHalf = -0.207886224977354566;
inline constexpr double kZetaMinus25 = 0.008516928777850330542;

inline const cplx kZeta03p8i{1.261129142406033103, 0.4078956991173587802};
inline const cplx kZeta095p29i{1.133151431102613472, -1.028688079832974086};
inline const cplx kZeta2p5i{0.8509629436242629572, 0.09899694613483134723};
inline const cplx kZeta11p99i{1.033715643385428059, 0.1452279139886907114};
inline const cplx kZeta005p1i{0.008117663221449208276, -0.4441277467551016828};
inline const cplx kZetaM17p32i{0.1841728708394267665, 0.1377735869703470805};
inline const cplx kZetaHalfp50i{-0.08171210832097997505, 0.3307921940386612956};

inline constexpr double kXi03 = -4.73886109191549432;
inline constexpr double kXi2 = 0.5235987755982988731;  // pi/6

// zeta at the Minkowski dimension of the Cantor string, log 2 / log 3.
inline constexpr double kZetaCantorD = -2.159810714003014981;

// Imaginary parts of the first 13 nontrivial zeros (all zeros with
// 0 < t < 60), plus the 100th.
inline constexpr double kZeroOrdinates[13] = {
    14.13472514173469379, 21.02203963877155499, 25.01085758014568876,
    30.42487612585951321, 32.93506158773918969, 37.58617815882567126,
    40.91871901214749519, 43.32707328091499952, 48.00515088116715973,
    49.77383247767230218, 52.97032147771446064, 56.4462476970633948,
    59.34704400260235308,
};
inline constexpr double kZero100 = 236.5242296658162058;

// Middle-thirds (Cantor) string: dimension log 2 / log 3, the
// oscillation period 2 pi / log 3 of its complex dimensions, and the
// common residue 1/(2 log 3) of its geometric zeta function.
inline constexpr double kCantorD = 0.6309297535714574371;
inline constexpr double kCantorP = 5.719201734760254534;
inline constexpr double kCantorResidue = 0.4551196133134186968;

// zeta at the first and fifth complex dimensions D + i n p.
inline const cplx kZetaCantorDp1{0.8072130335216655177, 0.2949066119545690898};
inline const cplx kZetaCantorDp5{1.778526628624047334, -1.340140099924112845};

// Principal-value logarithmic integral Li(x) = PV int_0^x dt/log t.
inline constexpr double kLiHalf = -0.3786710430610879767;
inline constexpr double kLi2 = 1.045163780117492785;
inline constexpr double kLi35 = 2.588765078750509318;
inline constexpr double kLi105 = 6.380459820246318014;
inline constexpr double kLi1005 = 30.23465640385965741;
inline constexpr double kLi1000 = 177.6096579901522267;

// First 100 ordinates of the critical-line zeros (mpmath zetazero),
// used as the oracle input for the prime-power explicit formula.
inline constexpr double kZeroOrdinates100[100] = {
    14.13472514173469379, 21.02203963877155499, 25.01085758014568876, 30.42487612585951321,
    32.93506158773918969, 37.58617815882567126, 40.91871901214749519, 43.32707328091499952,
    48.00515088116715973, 49.77383247767230218, 52.97032147771446064, 56.4462476970633948,
    59.34704400260235308, 60.83177852460980984, 65.11254404808160666, 67.07981052949417371,
    69.54640171117397925, 72.06715767448190758, 75.70469069908393317, 77.14484006887480537,
    79.33737502024936792, 82.91038085408603018, 84.73549298051705011, 87.42527461312522941,
    88.80911120763446542, 92.4918992705584843, 94.65134404051988697, 95.87063422824530976,
    98.83119421819369223, 101.3178510057313912, 103.7255380404783394, 105.4466230523260945,
    107.1686111842764075, 111.0295355431696745, 111.8746591769926371, 114.3202209154527128,
    116.2266803208575544, 118.7907828659762173, 121.3701250024206459, 122.9468292935525882,
    124.2568185543457672, 127.5166838795964951, 129.578704199956051, 131.0876885309326567,
    133.4977372029975865, 134.7565097533738713, 138.1160420545334432, 139.736208952121389,
    141.1237074040211238, 143.1118458076206327, 146.0009824867655185, 147.422765342559602,
    150.0535204207848804, 150.9252576122414668, 153.0246938111988962, 156.1129092942378676,
    157.5975918175940599, 158.8499881714204987, 161.1889641375960275, 163.0307096871819872,
    165.5370691879004188, 167.1844399781745134, 169.0945154155688215, 169.911976479411699,
    173.411536519591553, 174.7541915233657258, 176.4414342977104189, 178.3774077760999773,
    179.9164840202569961, 182.2070784843664619, 184.8744678483875088, 185.5987836777074715,
    187.228922583501852, 189.4161586560169371, 192.0266563607137865, 193.079726603845704,
    195.2653966795292353, 196.8764818409583169, 198.0153096762519124, 201.2647519437037887,
    202.4935945141405343, 204.1896718031045543, 205.394697202163286, 207.9062588878062099,
    209.5765097168562599, 211.6908625953653076, 213.3479193597126662, 214.5470447834914232,
    216.1695385082637003, 219.067596349021379, 220.7149188393140034, 221.4307055546933387,
    224.0070002546043352, 224.9833246695822875, 227.4214442796792913, 229.3374133055253481,
    231.2501887004991648, 231.9872352531802486, 233.6934041789083006, 236.5242296658162058,
};

// Non-prime-power evaluation points for the explicit formula check.
inline constexpr double kPiFormulaX[20] = {
    10, 12, 14.5, 21, 26, 30, 34.5, 42, 56, 69,
    86, 111, 144, 186, 217, 291, 370, 489, 574, 870,
};

// 50 log-spaced midpoints of the Cantor spectral staircase (x = 3k + 3/2),
// which also fall strictly between consecutive geometric jumps 3^k.
inline constexpr double kCountingMidpoints[50] = {
    4.5, 7.5, 10.5, 13.5, 16.5, 19.5, 22.5, 25.5, 28.5, 31.5,
    34.5, 37.5, 40.5, 43.5, 46.5, 49.5, 55.5, 64.5, 76.5, 88.5,
    103.5, 121.5, 142.5, 166.5, 196.5, 229.5, 268.5, 313.5, 367.5, 430.5,
    502.5, 589.5, 688.5, 808.5, 943.5, 1105.5, 1294.5, 1513.5, 1771.5, 2074.5,
    2428.5, 2842.5, 3325.5, 3892.5, 4555.5, 5329.5, 6238.5, 7300.5, 8542.5, 9997.5,
};

// Staircase-midpoint abscissas for the leading-coefficient fit of the
// spectral counting series over [1e2, 1e5], and the fitted coefficient
// of x obtained by unweighted least squares on the basis {x, x^D}.
inline constexpr double kSpectralFitX[48] = {
    100.5, 115.5, 133.5, 154.5, 181.5, 208.5, 241.5, 280.5, 325.5, 376.5,
    433.5, 502.5, 583.5, 676.5, 781.5, 907.5, 1051.5, 1216.5, 1408.5, 1633.5,
    1891.5, 2188.5, 2536.5, 2938.5, 3403.5, 3943.5, 4567.5, 5290.5, 6127.5, 7096.5,
    8221.5, 9520.5, 11029.5, 12775.5, 14797.5, 17140.5, 19855.5, 22999.5, 26638.5, 30856.5,
    35743.5, 41401.5, 47956.5, 55549.5, 64345.5, 74530.5, 86332.5, 100000.5,
};
inline constexpr double kSpectralFitCoeff = 1.000740393872959127;

// Truncated counting-series spot values (mpmath, same pole data).
inline constexpr double kGeomSeries105n200 = 2.997234494113402383;
inline constexpr double kSpecSeries105n200 = 4.978298235472928049;
inline constexpr double kSpecSeries1002n400 = 75.14051117247856592;

inline constexpr double k2Sqrt2 = 2.828427124746190098;

// zeta_L of the power-law string with L=1, D=1/2 at s = 0.75 + 2i,
// equal to zeta(1.5 + 4i).
inline const cplx kZeta15p4i{0.7466262029089388597, 0.02713113867723781454};
// Closed-form zeta_L of the middle-thirds string at s = 0.4 + 1.1i.
inline const cplx kCantorGz{-0.344567603259686985, -0.3448387294212107290};

// Total length of the power-law string with L = 0.7, D = 0.63:
// 0.7 * zeta(1/0.63).
inline constexpr double kPowerLaw063Length = 1.624667608067328274;

// Tube volumes of the power-law string L=1, D=1/2 (70 and 9 saturated
// intervals respectively; analytic tails).
inline constexpr double kPowerLawTube1em4 = 0.02818415935820681325;
inline constexpr double kPowerLawTube5em3 = 0.1951663356816857461;

// Content-sweep regression baselines over eps_k = 10^(-1 - 7k/63),
// k = 0..63, statistics over the finest 32 points (float64 pipeline
// reproduced independently in Python).
inline constexpr double kCantorContentLo = 2.494553810407762;
inline constexpr double kCantorContentHi = 2.577663806466727;
inline constexpr double kPowerLawContentLo = 2.823161606980488;
inline constexpr double kPowerLawContentHi = 2.828327127672399;

// Weyl-fit regression baselines (same independent pipeline).
// Middle-thirds string: x_k = 10^(2 + 3k/47), k = 0..47, statistics over
// the last 24 points.  Power-law L=1, D=1/2: x_k = 10^(2 + 4k/48),
// k = 0..48, statistics over the last 25 points, i.e. x in [1e4, 1e6].
inline constexpr double kCantorWeylMean = -1.527682303;
inline constexpr double kCantorWeylBandMin = -1.815427159;
inline constexpr double kCantorWeylBandMax = -1.066609309;
inline constexpr double kPowerLawWeylMean = -1.45837129359;

// Weighted-space operator anchors for the reference bump
// amp exp(-z^2/2) with quintic C^2 ramps on 3 <= |z| <= 4,
// z = (t - 0.5)/0.5, amp = 1, support [-1.5, 2.5].
// Computed with mpmath (dps=30) from the continuous definitions.
inline constexpr double kNormBumpC075 = 0.69413686810755749;
// sum_n f(2 - log n), the 33 terms with log n <= 3.5
inline constexpr double kDirichletBumpAt2 = 6.3543615179403746;
// -int_t^inf e^{t-tau} f(tau) dtau at t = 0.5 (decaying branch)
inline constexpr double kResolventBumpAt05 = -0.43812240747998962;
// int_{-inf}^t e^{t-tau} f(tau) dtau at t = 0.5 (growing branch)
inline constexpr double kResolventFwdBumpAt05 = 0.97974035260677052;

// Vertical-line infima min_{0 <= t <= T} |zeta(c + it)| computed by an
// independent mpmath scan at step 0.05 with golden-section refinement
// around the minimal sample (the same semantics the scanner uses).
// On both lines c = 0.3 and c = 0.7 the infimum over [0, 200] is
// already attained near the first zero ordinate, so the running
// envelope is constant from T = 25 onward.
inline constexpr double kInfLineC03 = 0.17220136971408256;   // all T in [25, 200]
inline constexpr double kInfLineC07 = 0.14643693733774975;   // all T in [25, 200]
inline constexpr double kInfLineC2T10 = 0.79636897538286252; // c = 2, T = 10
// Euler-product lower bound zeta(4)/zeta(2) for |zeta| on Re s = 2.
inline constexpr double kZeta4OverZeta2 = 0.65797362673929057;

}  // namespace ref
