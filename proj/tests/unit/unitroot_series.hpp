#pragma once

#include <array>

// Reference series for the unit-root statistics. Expected values were computed
// once with the Python `arch` package (ADF, PhillipsPerron, DFGLS) and frozen.
namespace fixture {

inline constexpr std::array<double, 80> kRandomWalk{
5.0012301533574828, 5.2999756908659528, 5.0258378355037348, 4.1352459967464608,
3.6805752115747383, 2.688928656578276, 2.7490722591757146, 4.0892875047302484,
3.5970809861789186, 2.9766060863589781, 3.4664481365441762, 3.8233351447042372,
3.9287493937021356, 2.9982813489939311, 2.9690295265306577, 3.6643327209889454,
2.3201181737038636, 1.8625024126636456, -0.038720327137198751, -1.3282580669221744,
-3.1699931047139067, -3.4050842357885873, -4.6725307172322914, -4.4012663584105898,
-4.2445152717863639, -4.4314462164163189, -6.9482059272368311, -7.4868988230834681,
-7.53539976848454, -7.4220907824812326, -8.9522265479866263, -9.4299798240205561,
-10.408498902077195, -11.217336141502795, -10.156437518116716, -10.963972193448612,
-10.996493898394132, -10.112104031010958, -10.695704463754259, -10.807406413338418,
-10.696942270088938, -10.633160495833875, -11.858216322251568, -11.782076091874561,
-10.423252670133024, -11.970397348261507, -11.11101466023991, -10.991660634543329,
-11.633131028650549, -9.6327144823081259, -8.8704547702234144, -10.069743672328638,
-9.9952274435571749, -9.4185378598869889, -9.6073199852377389, -8.9244097180425328,
-8.9909270381919484, -8.3236794773576204, -6.885156885701468, -7.5608191367071207,
-7.3576805263175125, -7.820988102855928, -7.6937196916300969, -8.8809142194802373,
-9.4602158159829113, -9.6564117887874072, -8.7576479166869987, -7.6124259092328668,
-8.9359537017171213, -9.7305960677041714, -9.0836926451307498, -11.076112429305244,
-11.53928229425761, -11.636569219927701, -10.37955424264088, -9.6901503420701243,
-10.017363762292321, -10.38593965639228, -10.636135056910204, -9.1126056564540434};

inline constexpr std::array<double, 80> kAr05{
-0.954130675036858, 0.30192574682403223, 0.28191408099681592, -1.3958778997930807,
0.55120979966191441, 1.7173120553535688, 0.79285112167657734, 0.12250928866596833,
-0.098612321637652184, -1.0244584835975723, 0.58635751795813151, -0.24971317275112104,
-0.17604699906723709, -0.88131990273666216, -1.0667330510885282, -1.8110916771954346,
0.35152347511667537, 0.021674164352324499, 0.97675870090497119, 0.50170394736574531,
-0.4435515540200215, -0.5484610370122629, -0.83446156900903101, -0.40927168531960184,
-0.57990268233675657, -0.58987305711017668, -1.6735112126910021, -1.6436015339666215,
0.83225678181711937, -0.25510482534315759, -1.1816462002950716, -0.25349676757250494,
1.2805238157702796, -0.81376239459606825, -0.61540304554930481, -0.93975407670956024,
-2.2308965126821829, -0.38052154708269992, -0.21370469209619461, -0.035410501755491958,
-0.77001672332333515, 0.069775801335249021, -0.50440944881969652, -0.39510793290660895,
-1.3058147586348174, -1.869010139525604, 0.4010267855372206, -0.30659131176986493,
0.13838470047086945, 0.035401915468062407, -0.42344424502815298, -0.71968309285129606,
0.27024104501993806, -0.16674708202394078, -0.23481718918326241, -0.095187037397151703,
1.1289148015534256, 1.2449683754098511, 1.0050844554329184, -0.061029165636782512,
-1.4124833028248567, 0.24328828032287364, 1.088091274382313, 0.40333723806781618,
0.74355246063742608, 1.153219284204118, 1.4077940947670409, 1.6252805206299912,
0.35702260965386284, 1.6934842874916489, -0.39985091453988386, 0.6617976197237071,
0.82483088889261202, 1.2860345579708083, 2.5220255860821412, 2.7454582664197194,
0.22755222602053471, -1.5748954672575897, 0.029441325425001774, -1.0002917531634221};

}  // namespace fixture
