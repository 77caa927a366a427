#pragma once
// ADF regression fixtures; reference statistics computed with an
// independent implementation (statsmodels 0.14 adfuller, autolag=None).

#include <vector>

namespace adf_fixtures {

// kRandomWalk50: statsmodels adfuller(maxlag=1, regression='c') -> stat=-1.761495609931, nobs=48
inline const std::vector<double> kRandomWalk50 = {1.0288568739519013, 2.6707769146230516, 3.8174964442196653, 2.8443169287450996, 1.4515168323682313, 1.5187131874393285, 2.3800641053797547, 2.8892509042254426, 4.6995364785207254, 5.4503799516746438, 6.0901395056061061, 5.3588169843768583, 4.2510999492495909, 5.7355055349332922, 5.784417938002826, 6.5959380549843836, 5.2195152150098147, 4.7831444791689952, 3.492052845821001, 2.7163741615772099, 3.6194372393208387, 2.1388559143004859, 1.604763084585904, 1.7685516567868849, 1.1000813518713684, 0.84779159222501166, 0.62593005134839874, 1.0440686210681005, 0.61281407270749233, 0.88507475271431524, 0.94189394819784955, 1.3664632043398175, 1.5914065924101115, 3.2490906476080417, 2.5854145781410311, 3.7846017437572668, 3.3819893173148521, 2.4240631443230387, 3.6352576136915085, 3.1957517096781523, 2.808115837950083, 1.4194321551984077, -0.67876463531251496, -0.04446369386849669, -1.2097300711571202, -0.43145708119828829, 1.4167102141227783, 1.3019122682726312, 0.17529716522299466, 0.5694963392331478};
inline constexpr double kRandomWalk50_stat = -1.7614956099310062;

// kWhiteNoise40: statsmodels adfuller(maxlag=1, regression='c') -> stat=-4.552099863909, nobs=38
inline const std::vector<double> kWhiteNoise40 = {0.76172847045416603, -0.26179037875573763, 0.017464490835138562, 1.335270728748762, 1.2654519785916296, 0.7099782281560677, -0.86640087717447278, -0.053675571091266104, 0.60291731743806987, -0.21186586854573583, -0.61001792898790541, -0.76538872020418658, -0.63200881928405017, -0.67160478835699866, -0.4511113866062102, 1.1456772338915662, -0.80064198131967712, 0.88690207111693697, 0.41758466099397479, 0.13974968489353012, -0.82740185502075181, -0.45669421292582424, 1.9735553403293085, 0.09906791154843822, 0.53820774724067555, 0.66303163272805543, 1.0556415438104036, -0.23751636353283292, -0.61019757201547387, -0.059613974391862584, -0.26081938409702304, 0.79067671614893464, 0.18961040307693869, 0.2392704544306721, 0.14500945046766703, 1.2283676805724408, -0.54262718067478588, -0.47835612233740088, 0.88513079623271096, -0.10641011004975655};
inline constexpr double kWhiteNoise40_stat = -4.5520998639091754;

// kTrendStat60: statsmodels adfuller(maxlag=1, regression='ct') -> stat=-5.091207873899, nobs=58
inline const std::vector<double> kTrendStat60 = {0.18043904267332447, -0.31449416537621067, 0.11166555375858753, 0.36591691420355077, -0.46371830285637167, -0.097467034207596392, 0.51153128408467474, 1.474404037552951, 0.63114300100032783, 0.42054020817400406, 0.077394388037192785, 0.74581296791989682, -0.65070337950855772, 0.62523534849806706, 0.53492767228034888, 0.49029354271625364, 1.9601766903831075, -0.38676928095601348, 0.88886259033443205, 0.98448953919415505, 1.2336649090525731, 0.24914965014621104, 0.86668869110122215, 0.40227579913634692, 1.1361906290768835, 1.3479597178121554, 1.3822435582512527, 1.2509951032780031, 1.4929714654381689, 1.5386808294910006, 1.7025341919450128, 1.5626126070178628, 0.70856468365768477, 1.2426466381855619, 1.8727867154977282, 1.2948352344033327, 1.4007875657693423, 1.9066781816653493, 1.8772353670595427, 2.3969035206589946, 2.2559269442415264, 1.8324330890880729, 2.1571269882492681, 0.72057374461170265, 1.8012974228943173, 2.176283845639992, 1.1063784281565814, 2.1887785111434797, 2.5258200112929003, 2.9674750751759538, 2.7014631764932537, 3.4921298500459272, 3.3639793908700697, 1.8328192980563212, 2.5869746149078643, 2.6719102400352202, 2.8458439450235873, 2.5636356017608057, 3.2051977122102193, 3.3225146114307411};
inline constexpr double kTrendStat60_stat = -5.0912078738993074;

// kAr05_45: statsmodels adfuller(maxlag=2, regression='c') -> stat=-1.932819880281, nobs=42
inline const std::vector<double> kAr05_45 = {0, 0.94537369176069463, -0.17486056424487056, 0.96886939391395344, 1.0490877403508712, 0.39400492184478825, 2.185375858021239, 1.9828843945801298, 1.023763367241348, 0.7608419079794968, 2.7955551018253764, 2.8149203490441703, 2.3571572038465201, 1.3937979639972369, 1.2596804960931041, 0.77832146164535421, -1.1366282664945961, 0.31735702023369339, 0.57344809425891752, -1.0638804716436543, -1.1742662509206554, -0.83509749790124499, -0.091835607584465684, 1.6829440951660457, 0.85919584607555288, -1.5116427801485344, -0.10601811787813697, -0.2211087491226324, -1.8533209386555225, -3.2083693072406958, -2.6685210283808356, -0.95596906661587489, -1.2363374575266308, -0.018460049797349276, -0.29033261062443261, 0.038527320647543911, 0.722176242365413, 0.94000552012417227, -0.58248058320570184, 1.6368465039291036, -1.1588828001057008, -0.76742065787774483, -1.4053010329042934, 0.48751940034654828, -1.0667637009670161};
inline constexpr double kAr05_45_stat = -1.9328198802811722;

}  // namespace adf_fixtures
