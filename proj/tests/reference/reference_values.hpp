// Frozen reference values for the qedlamb test suite.
// Generated by tests/reference/gen_reference.py; do not edit by hand.
#pragma once

namespace qedlamb::reference {

inline constexpr double alpha_physical = 0.0072973525205055605;
inline constexpr double lcut_physical = 9.8404873300635707;
inline constexpr double r0_over_compton = 0.011332382140091572;
inline constexpr double beta1_nominal = 0.00016539277474665885;
inline constexpr double beta2_nominal = 8.2696387373329427e-05;
inline constexpr double gamma_two_gamma1_plus_1 = 1.9999017231959741;

struct StateRef {
  int n; int two_j; int sigma;
  double gamma; double delta; double caln; double eps; double lambda;
  double norm_a; double beta; double rho_scale;
  int k_len; double k1[5]; double k2[5];
};

inline constexpr StateRef states[5] = {
  {1, 1, 1, 0.99997337396862296, 2.6626031377037875e-05, 1, 0.99997337396862296, 0.003648724835783762, 0.70711944788232672, 0.00016539277474665885, 0.014594705041011121, 1, {1.0000133131929272, 0, 0, 0, 0}, {1, 0, 0, 0, 0}},
  {2, 1, 1, 0.99997337396862296, 2.6626031377037875e-05, 1.999986686940002, 0.99999334347000102, 0.0018243563459100901, 0.35356501933930001, 8.2696937847977035e-05, 0.0072974010958748699, 3, {3.9998934962289669, -3.9999467477600081, 1.000003328276077, 0, 0}, {7.9997071164020159, -5.9998934958744918, 1, 0, 0}},
  {2, 1, -1, 0.99997337396862296, 2.6626031377037875e-05, 1.999986686940002, 0.99999334347000102, 0.0018243563459100901, 0.35356501933930001, 8.2696937847977035e-05, 0.0072974010958748699, 3, {3.9938603972082961e-05, 1.3312927069293261e-05, 0.33333148427793957, 0, 0}, {-7.9876410388389211e-05, -1.9999467481144835, 0.33333037486242723, 0, 0}},
  {2, 3, 1, 1.9999866871172396, 1.3312882760344062e-05, 2, 0.9999933435586198, 0.0018243442019465089, 0.20412789841862927, 8.2696387373329427e-05, 0.0072973525205055605, 1, {1.0000033282317671, 0, 0, 0, 0}, {1, 0, 0, 0, 0}},
  {3, 1, 1, 0.99997337396862296, 2.6626031377037875e-05, 2.9999822492599004, 0.99999704155206925, 0.0012162344155103799, 0.23571171266637866, 5.5131251122389631e-05, 0.0048649304657091396, 5, {8.9994808029631699, -17.999227855448513, 11.999677531087951, -2.9999630193461626, 0.25000036980653839}, {26.998242724938006, -41.998082954886243, 20.999405356193328, -3.9999467479372459, 0.25}},
};

inline constexpr double si_grid_x[15] = {0.25, 0.5, 1, 2, 3, 4, 4.5, 6, 8, 10, 15, 20, 30, 40, 50};
inline constexpr double si_values[15] = {-1.3216627564751395, -1.07768890875183, -0.62471325642771358, 0.034616650007798226, 0.27785620120457166, 0.18740681215415644, 0.083344087584347359, -0.14610877551439008, 0.0033904949120454326, 0.087551267423977425, 0.047398116913472121, -0.022554625751456781, -0.0040397867645455086, 0.016188792559887887, -0.019179254308960725};
inline constexpr double ci_values[15] = {-0.82466306258094568, -0.1777840788066129, 0.33740392290096816, 0.42298082877486498, 0.11962978600800032, -0.14098169788693041, -0.19349112210173874, -0.068057243893247132, 0.12243388253200956, -0.045456433004455371, 0.04627867767436044, 0.044419820845353314, -0.033032417282071146, 0.019020007896208765, -0.0056283863241163058};
inline constexpr double fg_grid_x[5] = {0.5, 2, 4, 10, 40};
inline constexpr double f_aux_values[5] = {0.8605267657261586, 0.39902098859418383, 0.22919256802452698, 0.098191035010170166, 0.02496898012626847};
inline constexpr double g_aux_values[5] = {0.67269179286854908, 0.14454530303733243, 0.04967815559365675, 0.0094885390163548071, 0.00062268481026555851};
inline constexpr double z0_re = 0.00011695035258262165;
inline constexpr double z0_im = 0.00011695035258262165;
inline constexpr double ci_z0_re = -8.1299717949420618;
inline constexpr double ci_z0_im = 0.78539815655875578;
inline constexpr double si_z0_re = 0.0001169503527603522;
inline constexpr double si_z0_im = 0.0001169503524048911;
inline constexpr double f_z0_re = 1.569636720777388;
inline constexpr double f_z0_im = -0.0009759223070157409;
inline constexpr double g_z0_re = 8.1301554893849595;
inline constexpr double g_z0_im = -0.7852145899268631;
inline constexpr double laguerre2_coeffs[3] = {5.9998136191982514, -3.9999467479372459, 0.5};

struct LegendreSpot { int l; int m; double theta; double value; };
inline constexpr LegendreSpot legendre_spots[6] = {
  {0, 0, 0.69999999999999996, 0.70710678118654757},
  {1, 0, 0.29999999999999999, 1.1700434655098326},
  {1, 1, 1, 0.72873524939114787},
  {2, 1, 2, -0.73277086517395573},
  {2, 2, 1, 0.68558913921642495},
  {5, 3, 1.234, -0.012492588499646622},
};

inline constexpr double c_pp_limit[3] = {0.40000000000000002, 0.24543692606170259, 0.17142857142857143};
inline constexpr double c_elec_limit[3] = {25.241299546836185, 17.93384942446815, 14.278113061435045};
inline constexpr double c_mag_limit[4] = {0.78539816339744828, 0.66666666666666663, 0.58904862254808621, 0.53333333333333333};
inline constexpr double cmu_pp_1s[1] = {0.39645769626973276};
inline constexpr double cmu_elec_1s[1] = {24.982413135648272};
inline constexpr double bmu_mag_1s[1] = {0.9886401446501043};
inline constexpr double j_state_1s[1] = {7.1636544630731532e-09};
inline constexpr double cmu_pp_2s[3] = {0.39822835026890274, 0.24357605290544737, 0.16956429862931247};
inline constexpr double cmu_elec_2s[3] = {25.111585872891421, 17.77877756633238, 14.103697065662603};
inline constexpr double bmu_mag_2s[3] = {0.99429353305708734, 0.99997359383745243, 0.99999988692092612};
inline constexpr double j_state_2s[3] = {1.7911605437445269e-09, 1.5702142017589179e-13, 8.4423559326127675e-17};
inline constexpr double cmu_pp_2p12[3] = {0.39822835026890274, 0.24357605290544737, 0.16956429862931247};
inline constexpr double cmu_elec_2p12[3] = {25.111585872891421, 17.77877756633238, 14.103697065662603};
inline constexpr double bmu_mag_2p12[3] = {0.99429353305708734, 0.99997359383745243, 0.99999988692092612};
inline constexpr double j_state_2p12[3] = {1.7911605437445269e-09, 1.5702142017589179e-13, 8.4423559326127675e-17};
inline constexpr double cmu_pp_2p32[1] = {0.16956286734822845};
inline constexpr double cmu_elec_2p32[1] = {14.103624326829198};
inline constexpr double bmu_mag_2p32[1] = {0.9999998869396638};
inline constexpr double j_state_2p32[1] = {8.4410109334228937e-17};

inline constexpr double phi_spots_rho[5] = {8.2696387373329427e-05, 0.00016539277474665885, 0.00033078554949331771, 0.0016539277474665888, 0.5};
inline constexpr double phi_spots_value[5] = {5622.2063647438526, 804.30969771112245, 36.530912138192008, 0.012091754912776252, 4.7890140056495025e-15};
inline constexpr double j_dual_mu[5] = {2, 3, 4, 5, 6};
inline constexpr double j_dual_beta1[5] = {7.1602064555608322e-09, 1.2549069588110112e-12, 1.2466588967130146e-15, 1.4963377938178934e-16, 1.4965668538038765e-16};
inline constexpr double j_dual_beta2[5] = {1.7902085171213358e-09, 1.5694415583550798e-13, 8.4398847087096568e-17, 9.3528270596937017e-18, 9.3535429439030743e-18};
inline constexpr double e_family_a = 0.01;
inline constexpr double e_family_even = 0.98479560780701758;
inline constexpr double e_family_odd = 0.9995956614172623;

inline constexpr double uehling_rho_grid[7] = {0.01, 0.10000000000000001, 0.5, 1, 2, 5, 10};
inline constexpr double uehling_1s_values[7] = {-1.562551453860598e-06, -5.4754977493933019e-14, -1.8185434200496407e-39, -5.7671070428119243e-70, -3.1620517389795288e-130, -9.259300242269283e-310, -0};
inline constexpr double uehling_rho1_1s = -5.7671070428119243e-70;
inline constexpr double elec_rho05_1s = 9.6759919759126617e-37;
inline constexpr double mag_rho1_2p32 = 2.2565836783461197e-10;
inline constexpr double m_kernel_x[3] = {0.5, 2, 50};
inline constexpr double m_kernel_values[3] = {0.17177943999834955, 0.72026823636695514, 1};
inline constexpr double ih_x[2] = {0.5, 2};
inline constexpr double ih_values[2] = {0.50637365706977666, 0.085490578676908985};
inline constexpr double uehling_r_grid[10] = {0.0001, 0.001, 0.01, 0.10000000000000001, 0.5, 1, 2, 4, 8, 16};
inline constexpr double uehling_r_values[10] = {-0.88142553184952055, -0.062146624261838916, -0.0036364713640089693, -0.00012584014902692039, -4.0214014604010472e-06, -4.0605012885457636e-07, -1.3589851466584013e-08, -5.571027813628861e-11, -3.8454239691864881e-15, -8.3702792336135382e-23};
inline constexpr double uehling_smallr_c_fit = 0.57610391510156767;
inline constexpr double uehling_tail_ratio_8 = 0.82354091637379834;
inline constexpr double uehling_tail_ratio_16 = 0.90108881361107951;
inline constexpr double uehling_tail_ratio_90 = 0.98038049027421492;
inline constexpr double vac_r_grid[5] = {0.0056661910700457861, 0.011332382140091572, 0.022664764280183144, 0.056661910700457861, 0.11332382140091572};
inline constexpr double vac_potential_values[5] = {0.19959340020902516, 0.028553720189630583, 0.0012968803514794294, 1.3725148474253396e-05, 4.2926821268417679e-07};
inline constexpr double vac_field_values[5] = {-9771.6381397800342, -1297.7956904395357, -38.170461483515759, -0.16585248440121864, -0.0025953318476943021};
inline constexpr double vac_cubic_residual_5r0 = 8.5045895161569365e-07;

struct ElementRef {
  int state;    // index into states[]
  int kind;     // 0 pp, 1 elec, 2 mag, 3 vac
  double quadrature;
  double closed_form;
  double rel_disc;
  double halving_ratio;
};
inline constexpr ElementRef elements[16] = {
  {0, 0, -1.7414367655600964e-12, -1.7564892365771482e-12, 0.0086437080660868356, 1.9685726665101411},
  {0, 1, 8.2301264049425071e-11, 8.313013307107015e-11, 0.010071157851807754, 1.9648936948957643},
  {0, 2, 3.256264673835322e-12, 3.25578293290843e-12, 0.00014794280414705512, 3.9661994090445174},
  {0, 3, 1.2716434811124432e-13, 1.8132966249284218e-12, 13.259473286821999, 0.89545893049894021},
  {1, 0, -2.1768793270516657e-13, -2.1661183387206772e-13, 0.0049433095336355653, 2.0905511423718237},
  {1, 1, 1.0288024019484463e-11, 1.0341479225881199e-11, 0.005195867184553441, 1.9450137406995067},
  {1, 2, 4.0704120245752193e-13, 4.0695825170264781e-13, 0.00020378957799178522, 3.9790240220799964},
  {1, 3, 1.5896288754926273e-14, 2.7879965082852926e-13, 16.538662962581689, 0.91433954718955346},
  {2, 0, -2.8063141778367283e-18, -2.8284059179319663e-18, 2.0048073164761432e-05, 1.9542974040933931},
  {2, 1, 1.4209608594310532e-16, 1.4332106816800417e-16, 0.0011116613342557881, 1.6900474218999062},
  {2, 2, -1.3723455846007442e-13, -1.3722846190338456e-13, 4.4424354610472415e-05, 4.0020027197045707},
  {2, 3, 1.5880411797579755e-19, -1.3722846190338456e-13, 124.53384913922399, 0.25000398241575322},
  {3, 0, -6.1963327773005482e-19, -6.2635332453912373e-19, 6.0983874297830751e-06, 1.9795338332175243},
  {3, 1, 3.8654136543170243e-17, 3.9126253180767052e-17, 0.00042844198112226823, 1.7102004535969599},
  {3, 2, 6.8613918732913311e-14, 6.8612852970485439e-14, 1.5532743903189669e-05, 4.0002114555440489},
  {3, 3, 6.243240076302988e-23, -2.4690466673246129e-15, 2.2406396812559652, 0.35355339863693952},
};

inline constexpr double family_elec_n1 = 8.313013307107015e-11;
inline constexpr double family_elec_n2 = 3.9126253180767052e-17;
inline constexpr double family_mag_n1 = 3.25578293290843e-12;
inline constexpr double family_mag_n2 = 6.8612852970485439e-14;
inline constexpr double pp_scaling_slope_n1 = 4.9954703686802215;
inline constexpr double pp_scaling_expected_n1 = 4.9999989999997503;
inline constexpr double pp_scaling_slope_n2 = 6.9942648639044229;
inline constexpr double pp_scaling_expected_n2 = 6.9999994999999684;
inline constexpr double offdiag_pp_2s3s = -1.1849436935697195e-13;
inline constexpr double offdiag_ratio_to_diag = 0.54433136409751759;

inline constexpr double unit_mhz = 135.64377954697383;
inline constexpr double d_assembly = 0.40075899999999998;
inline constexpr double cl_canonical = 10.24124633006357;
inline constexpr double headline_mhz = 1389.1613594813978;
inline constexpr double cl_bracket = 9.9710091773659855;
inline constexpr double d_bracket = 0.13052184730241564;
inline constexpr double bracket_mhz = 1352.5053707154848;
inline constexpr double exact_delta_mhz = 1313.4776865344843;
inline constexpr double exact_cl = 9.6832872905876464;
inline constexpr double closed_sum_delta_mhz = 1369.6442748808645;
inline constexpr double closed_sum_cl = 10.097361482076312;
inline constexpr double schwinger_unit_mhz = 135.45129199366571;
inline constexpr double schwinger_cl = 7.7221847528753003;
inline constexpr double schwinger_delta_mhz = 1045.9799017907455;
inline constexpr double calibrate_lcut_star = 7.3979399416913525;
inline constexpr double calibrate_offset = -2.4425473883722173;

}  // namespace qedlamb::reference
