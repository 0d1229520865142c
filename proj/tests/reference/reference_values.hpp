// Generated by generate_reference_values.py -- do not edit by hand.
// 50-digit arbitrary-precision values rounded to double precision.
#pragma once

#include <complex>

namespace refval {

inline const std::complex<double> lg_mid(0.7853469580738222, 2.583012925115262);
inline const std::complex<double> lg_lower(-5.3642467739809945, -1.5556328792595103);
inline const std::complex<double> lg_left(-0.40520869521992348, -8.4562336628709444);
inline const std::complex<double> lg_big(103.8485764500821, 55.490771070660851);
inline const std::complex<double> ig_left(-4.5236403269202135, 13.028703742572522);
inline const std::complex<double> ig_nearpole(1.3484047212708965e-13, 7.1999999999999999e-6);
inline const std::complex<double> dg_mid(0.41161299836241488, -0.62660673984209591);
inline const std::complex<double> lag_frac(2.1898778333333333, -2.73405725);
inline const std::complex<double> f1_small(2.1962712197901631, 1.8575127396469862);
inline const std::complex<double> f1_below_seam(-1811161163249026.6, 638035517138168.07);
inline const std::complex<double> f1_above_seam(-12983876110005935.0, 4129188197704175.2);
inline const std::complex<double> f1_int_c(3.192853246343711, 0.0);
inline const std::complex<double> f1_neg_z(0.46414565481992987, -0.48677796027354921);
inline const std::complex<double> u_poly(3.736, 1.504);
inline const std::complex<double> u_log_c2(0.84949038253315898, -0.16720907147481819);
inline const std::complex<double> u_near_c2(0.84949104780714669, -0.16720902961485312);
inline const std::complex<double> u_conn(0.062822603737389779, -0.069980404220505825);
inline const std::complex<double> u_laplace(0.0057468024587172814, -0.017893394684033451);
inline const std::complex<double> u_far(-0.00029754806211127942, -0.0052928872070192971);
inline const std::complex<double> u_wide_angle(0.29152593026439407, -0.45864484572578528);
inline const std::complex<double> f20_tail(0.99826636139120958, 0.00075509221262451974);
inline const std::complex<double> I_mid(1.1381657771652469, -1.0635671896102244);
inline const std::complex<double> Id_mid(-0.022684092346508474, -0.72640427068242447);
inline const std::complex<double> I_far(-29488944330.927478, -22401686026.910938);
inline const std::complex<double> I_near_half(-0.77111870289645528, 0.0);
inline const std::complex<double> I_snap_half(-0.57687758480771014, 0.0);
inline const std::complex<double> K_mid(0.57439343969310092, 0.10463429672176671);
inline const std::complex<double> Kd_mid(-0.15864542412659278, 0.061423370322244535);
inline const std::complex<double> K_laplace(0.0026098015548632196, 0.0026567986793508486);
inline const std::complex<double> K_far(6.8993307747810075e-12, 1.7597621081727446e-11);
inline const std::complex<double> K_int_c(0.65522437141742245, 0.0);
inline const std::complex<double> K_neg_m(0.48861432897261508, 0.14980933464764319);
inline const std::complex<double> Hp_mid(2.6507127586657308, 0.5771651754620132);
inline const std::complex<double> Hpd_mid(-0.24459367581639474, 2.2754147910052056);
inline const std::complex<double> Hm_mid(2.6507127586657308, -0.5771651754620132);
inline const std::complex<double> Hp_far(-2.6303654037586789, -2.1941980800891106);
inline const std::complex<double> Hm_far(-2.6303654037586789, 2.1941980800891106);
inline const std::complex<double> Hp_near(0.59572545267391212, -1.8854135825070005);
inline const std::complex<double> J_mid(0.52697472310704154, -4.6273086614674569e-51);
inline const std::complex<double> Jd_mid(-0.30536535950441049, 2.3303700688171592e-60);
inline const std::complex<double> J_far(0.77250513559108069, 2.5956122455328159e-32);
inline const std::complex<double> J_cplx(0.62654413726253547, -0.13941095109528095);
inline const std::complex<double> zj_mid(0.06835396290820195, 0.0);
inline const std::complex<double> zjd_mid(-0.94645129044277028, 0.0);
inline const std::complex<double> zy_mid(1.1900730897875737, 0.0);
inline const std::complex<double> zyd_mid(0.20231765592064277, 0.0);
inline const std::complex<double> zj_negb(-0.6358219934862368, 4.014422074437433);
inline const std::complex<double> zy_negb(-4.1583849147911739, -0.61302051958927899);
inline const std::complex<double> zj_pole_small(-0.28433348494137686, 0.0);
inline const std::complex<double> zj_pole_large(1.1087537793809466, 0.0);
inline const std::complex<double> res_cplx(0.1474040860524074, -0.07751203032040004);
inline const std::complex<double> res_real(-1.032411320476084, 0.0);
inline const std::complex<double> bnd_plus(-0.70262937136729831, 0.37610233387866986);
inline const std::complex<double> bnd_minus(-0.70262937136729831, -0.37610233387866986);
inline const std::complex<double> dens_mid(0.11971709109037744, -7.3641286843341863e-51);
inline const std::complex<double> riesz_n0(0.33864535376591977, 0.0);
inline const std::complex<double> riesz_n2(0.010192769300534133, 0.0);
inline const std::complex<double> g_coulomb(0.56734705983240762, -0.82347878764393348);
inline const std::complex<double> g_generic(-0.34351181992595632, -0.9391483533346355);
inline const std::complex<double> fp_mid(-0.62491131937782172, -0.451236995323938);
inline const std::complex<double> fm_mid(-0.62491131937782172, 0.451236995323938);
inline const std::complex<double> fsym_mid(-0.77079762780869114, 3.1484549092050456e-49);
inline const std::complex<double> fp_offhalf(0.70238205317744128, 0.30585375973300838);

}  // namespace refval
