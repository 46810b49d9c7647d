#pragma once

// Data transcribed from the reference figures and tables.

#include <array>
#include <string>
#include <vector>

namespace fixtures {

struct TreeRow {
    const char* path;
    std::array<long, 3> triple, first, second;
};

// triples with weights and coweights (r, s)
inline const std::vector<TreeRow> tree_rs = {
    {"-", {1,5,2}, {0,2,1}, {1,1,1}},
    {"L", {1,13,5}, {0,5,2}, {1,2,1}},
    {"LL", {1,34,13}, {0,13,5}, {1,5,2}},
    {"LLL", {1,89,34}, {0,34,13}, {1,13,5}},
    {"LLR", {34,1325,13}, {13,507,5}, {5,194,2}},
    {"LR", {13,194,5}, {5,75,2}, {2,29,1}},
    {"LRL", {13,7561,194}, {5,2923,75}, {2,1130,29}},
    {"LRR", {194,2897,5}, {75,1120,2}, {29,433,1}},
    {"R", {5,29,2}, {2,12,1}, {1,5,1}},
    {"RL", {5,433,29}, {2,179,12}, {1,74,5}},
    {"RLL", {5,6466,433}, {2,2673,179}, {1,1105,74}},
    {"RLR", {433,37666,29}, {179,15571,12}, {74,6437,5}},
    {"RR", {29,169,2}, {12,70,1}, {5,29,1}},
    {"RRL", {29,14701,169}, {12,6089,70}, {5,2522,29}},
    {"RRR", {169,985,2}, {70,408,1}, {29,169,1}},
};

// triples with T-weights and T-coweights (w, v)
inline const std::vector<TreeRow> tree_wv = {
    {"-", {1,5,2}, {-1,1,1}, {10,2,5}},
    {"L", {1,13,5}, {-1,2,1}, {10,1,2}},
    {"LL", {1,34,13}, {-1,5,2}, {10,1,1}},
    {"LLL", {1,89,34}, {-1,13,5}, {10,2,1}},
    {"LLR", {34,1325,13}, {5,196,2}, {1,29,1}},
    {"LR", {13,194,5}, {2,31,1}, {1,5,2}},
    {"LRL", {13,7561,194}, {2,1208,31}, {1,193,5}},
    {"LRR", {194,2897,5}, {31,463,1}, {5,74,2}},
    {"R", {5,29,2}, {1,7,1}, {2,2,5}},
    {"RL", {5,433,29}, {1,104,7}, {2,25,2}},
    {"RLL", {5,6466,433}, {1,1553,104}, {2,373,25}},
    {"RLR", {433,37666,29}, {104,9047,7}, {25,2173,2}},
    {"RR", {29,169,2}, {7,41,1}, {2,10,5}},
    {"RRL", {29,14701,169}, {7,3566,41}, {2,865,10}},
    {"RRR", {169,985,2}, {41,239,1}, {10,58,5}},
};

struct DigitRow {
    const char* path;
    const char* digits;
};

// expansions of g^2/(g w_g - 1), preorder to depth 4
inline const std::vector<DigitRow> square_cfs = {
    {"-", "6,4"},
    {"L", "6,1,3,6"},
    {"LL", "6,1,5,3,1,6"},
    {"LLL", "6,1,5,1,3,5,1,6"},
    {"LLLL", "6,1,5,1,5,3,1,5,1,6"},
    {"LLLR", "6,1,5,3,1,5,1,6,8,1,5,1,3,5,1,6"},
    {"LLR", "6,1,3,5,1,6,8,1,5,3,1,6"},
    {"LLRL", "6,1,3,5,1,6,8,1,5,1,3,5,1,8,6,1,5,3,1,6"},
    {"LLRR", "6,1,3,5,1,8,6,1,5,3,1,6,8,1,5,3,1,6"},
    {"LR", "6,3,1,6,8,1,3,6"},
    {"LRL", "6,3,1,6,8,1,5,3,1,8,6,1,3,6"},
    {"LRLL", "6,3,1,6,8,1,5,3,1,6,8,1,3,5,1,8,6,1,3,6"},
    {"LRLR", "6,3,1,6,8,1,3,5,1,8,6,1,3,6,8,1,5,3,1,8,6,1,3,6"},
    {"LRR", "6,3,1,8,6,1,3,6,8,1,3,6"},
    {"LRRL", "6,3,1,8,6,1,3,6,8,1,5,3,1,8,6,3,1,6,8,1,3,6"},
    {"LRRR", "6,3,1,8,6,3,1,6,8,1,3,6,8,1,3,6"},
    {"R", "4,6,8,4"},
    {"RL", "4,6,8,1,3,8,6,4"},
    {"RLL", "4,6,8,1,3,6,8,3,1,8,6,4"},
    {"RLLL", "4,6,8,1,3,6,8,1,3,8,6,3,1,8,6,4"},
    {"RLLR", "4,6,8,1,3,8,6,3,1,8,6,4,8,1,3,6,8,3,1,8,6,4"},
    {"RLR", "4,6,8,3,1,8,6,4,8,1,3,8,6,4"},
    {"RLRL", "4,6,8,3,1,8,6,4,8,1,3,6,8,3,1,8,4,6,8,1,3,8,6,4"},
    {"RLRR", "4,6,8,3,1,8,4,6,8,1,3,8,6,4,8,1,3,8,6,4"},
    {"RR", "4,8,6,4,8,4"},
    {"RRL", "4,8,6,4,8,1,3,8,4,6,8,4"},
    {"RRLL", "4,8,6,4,8,1,3,8,6,4,8,3,1,8,4,6,8,4"},
    {"RRLR", "4,8,6,4,8,3,1,8,4,6,8,4,8,1,3,8,4,6,8,4"},
    {"RRR", "4,8,4,6,8,4,8,4"},
    {"RRRL", "4,8,4,6,8,4,8,1,3,8,4,8,6,4,8,4"},
    {"RRRR", "4,8,4,8,6,4,8,4,8,4"},
};

// length encodings, preorder to depth 4
inline const std::vector<DigitRow> length_encodings = {
    {"-", "3"},
    {"L", "1,5"},
    {"LL", "3,1,5"},
    {"LLL", "1,5,1,5"},
    {"LLLL", "3,1,5,1,5"},
    {"LLLR", "6,1,5,1,3,5,1,5"},
    {"LLR", "6,1,5,3,1,5"},
    {"LLRL", "1,5,1,8,6,1,5,3,1,5"},
    {"LLRR", "3,1,6,8,1,5,3,1,5"},
    {"LR", "6,1,3,5"},
    {"LRL", "3,1,8,6,1,3,5"},
    {"LRLL", "6,1,3,5,1,8,6,1,3,5"},
    {"LRLR", "1,6,8,1,5,3,1,8,6,1,3,5"},
    {"LRR", "1,6,8,1,3,5"},
    {"LRRL", "3,1,8,6,3,1,6,8,1,3,5"},
    {"LRRR", "6,1,3,6,8,1,3,5"},
    {"R", "6,3"},
    {"RL", "1,8,6,3"},
    {"RLL", "6,3,1,8,6,3"},
    {"RLLL", "1,8,6,3,1,8,6,3"},
    {"RLLR", "4,8,1,3,6,8,3,1,8,6,3"},
    {"RLR", "4,8,1,3,8,6,3"},
    {"RLRL", "6,3,1,8,4,6,8,1,3,8,6,3"},
    {"RLRR", "1,8,6,4,8,1,3,8,6,3"},
    {"RR", "4,8,3"},
    {"RRL", "1,8,4,6,8,3"},
    {"RRLL", "4,8,3,1,8,4,6,8,3"},
    {"RRLR", "6,4,8,1,3,8,4,6,8,3"},
    {"RRR", "6,4,8,3"},
    {"RRRL", "1,8,4,8,6,4,8,3"},
    {"RRRR", "4,8,4,8,3"},
};

// value (a + m sqrt(b)) / (2c) as printed, and its printed period
struct SpectrumRow {
    const char* path;
    long a, m, b, c;
    const char* period;
};

inline const std::vector<SpectrumRow> spectrum_r = {
    {"root:2", 4, 1, 32, 2, "2,2"},
    {"root:1", 1, 1, 5, 1, "1,1"},
    {"L", 11, 1, 221, 5, "2,1,1,2"},
    {"LL", 29, 1, 1517, 13, "2,1,1,1,1,2"},
    {"LLL", 68, 1, 10400, 34, "2,1,1,1,1,1,1,2"},
    {"LLLL", 199, 1, 71285, 89, "2,1,1,1,1,1,1,1,1,2"},
    {"LLLR", 105, 1, 71285, 115, "1,1,1,1,1,1,1,2,2,1"},
    {"LLR", 40, 1, 10400, 44, "1,1,1,1,1,2,2,1"},
    {"LLRL", 2961, 1, 15800621, 1327, "2,1,1,1,1,2,2,1,1,1,1,1,1,2"},
    {"LLRR", 1559, 1, 15800621, 1715, "1,1,1,1,1,2,2,1,1,1,1,2,2,1"},
    {"LR", 15, 1, 1517, 17, "1,1,1,2,2,1"},
    {"LRL", 432, 1, 338720, 196, "2,1,1,2,2,1,1,1,1,2"},
    {"LRLL", 16837, 1, 514518485, 15278, "2,1,1,2,2,1,1,1,1,2,2,1,1,1,1,2"},
    {"LRLR", 8731, 1, 514518485, 19798, "1,1,1,2,2,1,1,1,1,2,2,1,1,2,2,1"},
    {"LRR", 224, 1, 338720, 254, "1,1,1,2,2,1,1,2,2,1"},
    {"LRRL", 6451, 1, 75533477, 2927, "2,1,1,2,2,1,1,2,2,1,1,1,1,2"},
    {"LRRR", 3345, 1, 75533477, 3793, "1,1,1,2,2,1,1,2,2,1,1,2,2,1"},
    {"R", 5, 1, 221, 7, "1,2,2,1"},
    {"RL", 63, 1, 7565, 41, "2,2,2,1,1,2"},
    {"RLL", 941, 1, 1687397, 463, "2,2,2,1,1,2,2,1,1,2"},
    {"RLLL", 14052, 1, 376282400, 6914, "2,2,2,1,1,2,2,1,1,2,2,1,1,2"},
    {"RLLR", 6496, 1, 376282400, 9124, "1,2,2,1,1,2,2,1,1,2,2,2,2,1"},
    {"RLR", 435, 1, 1687397, 611, "1,2,2,1,1,2,2,2,2,1"},
    {"RLRL", 81856, 1, 12768548000, 40276, "2,2,2,1,1,2,2,2,2,1,1,2,2,1,1,2"},
    {"RLRR", 37840, 1, 12768548000, 53150, "1,2,2,1,1,2,2,2,2,1,1,2,2,2,2,1"},
    {"RR", 29, 1, 7565, 31, "1,2,2,2,2,1"},
    {"RRL", 367, 1, 257045, 181, "2,2,2,2,2,1,1,2"},
    {"RRLL", 31925, 1, 1945074605, 31490, "2,2,2,2,2,1,1,2,2,2,2,1,1,2"},
    {"RRLR", 14703, 1, 1945074605, 41578, "1,2,2,2,2,1,1,2,2,2,2,2,2,1"},
    {"RRR", 169, 1, 257045, 239, "1,2,2,2,2,2,2,1"},
    {"RRRL", 2139, 1, 8732021, 1055, "2,2,2,2,2,2,2,1,1,2"},
    {"RRRR", 985, 1, 8732021, 1393, "1,2,2,2,2,2,2,2,2,1"},
};

inline const std::vector<SpectrumRow> spectrum_t = {
    {"root:2", 16, 3, 32, 4, "4,8"},
    {"root:1", 5, 3, 5, 1, "5,1"},
    {"L", 43, 3, 221, 7, "6,3,1,8"},
    {"LL", 113, 3, 1517, 17, "6,1,3,5,1,8"},
    {"LLL", 296, 3, 10400, 44, "6,1,5,3,1,5,1,8"},
    {"LLLL", 775, 3, 71285, 115, "6,1,5,1,3,5,1,5,1,8"},
    {"LLLR", 589, 3, 71285, 119, "5,1,5,3,1,5,1,6,8,1"},
    {"LLR", 224, 3, 10400, 46, "5,1,3,5,1,6,8,1"},
    {"LLRL", 11533, 3, 15800621, 1735, "6,1,3,5,1,6,8,1,5,3,1,5,1,8"},
    {"LLRR", 8731, 3, 15800621, 1793, "5,1,3,5,1,8,6,1,5,3,1,6,8,1"},
    {"LR", 83, 3, 1517, 19, "5,3,1,6,8,1"},
    {"LRL", 1684, 3, 338720, 274, "6,3,1,6,8,1,3,5,1,8"},
    {"LRLL", 65633, 3, 514518485, 10679, "6,3,1,6,8,1,5,3,1,8,6,1,3,5,1,8"},
    {"LRLR", 48335, 3, 514518485, 11065, "5,3,1,6,8,1,3,5,1,8,6,1,3,6,8,1"},
    {"LRR", 1240, 3, 338720, 284, "5,3,1,8,6,1,3,6,8,1"},
    {"LRRL", 25147, 3, 75533477, 4093, "6,3,1,8,6,1,3,6,8,1,3,5,1,8"},
    {"LRRR", 18517, 3, 75533477, 4241, "5,3,1,8,6,3,1,6,8,1,3,6,8,1"},
    {"R", 25, 3, 221, 11, "3,6,8,1"},
    {"RL", 247, 3, 7565, 61, "4,6,8,3,1,8"},
    {"RLL", 3689, 3, 1687397, 911, "4,6,8,1,3,8,6,3,1,8"},
    {"RLLL", 55088, 3, 376282400, 13604, "4,6,8,1,3,6,8,3,1,8,6,3,1,8"},
    {"RLLR", 32600, 3, 376282400, 14350, "3,6,8,1,3,8,6,3,1,8,6,4,8,1"},
    {"RLR", 2183, 3, 1687397, 961, "3,6,8,3,1,8,6,4,8,1"},
    {"RLRL", 320900, 3, 12768548000, 79250, "4,6,8,3,1,8,6,4,8,1,3,8,6,3,1,8"},
    {"RLRR", 189896, 3, 12768548000, 83596, "3,6,8,3,1,8,4,6,8,1,3,8,6,4,8,1"},
    {"RR", 145, 3, 7565, 65, "3,8,6,4,8,1"},
    {"RRL", 1439, 3, 257045, 359, "4,8,6,4,8,3,1,8"},
    {"RRLL", 125177, 3, 1945074605, 31229, "4,8,6,4,8,1,3,8,4,6,8,3,1,8"},
    {"RRLR", 73523, 3, 1945074605, 32959, "3,8,6,4,8,3,1,8,4,6,8,4,8,1"},
    {"RRR", 845, 3, 257045, 379, "3,8,4,6,8,4,8,1"},
    {"RRRL", 8387, 3, 8732021, 2093, "4,8,4,6,8,4,8,3,1,8"},
    {"RRRR", 4925, 3, 8732021, 2209, "3,8,4,8,6,4,8,4,8,1"},
};

// k and M(10^k) - C (ln 10^k)^2 from the census plot data
struct DeviationRow {
    long k;
    const char* deviation;
};
inline const std::vector<DeviationRow> deviation_rows = {
    {0, "1.0"},
    {100, "88.56323998934204"},
    {200, "186.25295995736815"},
    {300, "285.0691599040583"},
    {400, "362.0118398294726"},
    {500, "448.0809997334436"},
    {600, "552.2766396162333"},
    {700, "646.598759477667"},
    {800, "735.0473593178904"},
    {900, "827.6224391363794"},
    {1000, "903.3239989337744"},
    {1100, "1018.1520387104247"},
    {1200, "1103.1065584649332"},
    {1300, "1176.1875581985805"},
    {1400, "1279.3950379106682"},
    {1500, "1374.7289976011962"},
    {1600, "1475.1894372715615"},
    {1700, "1553.7763569196686"},
    {1800, "1631.4897565455176"},
    {1900, "1694.3296361514367"},
    {2000, "1817.2959957350977"},
    {2100, "1914.3888352988288"},
    {2200, "2011.6081548416987"},
    {2300, "2147.953954361379"},
    {2400, "2196.4262338597327"},
    {2500, "2296.024993338622"},
    {2600, "2377.750232794322"},
    {2700, "2456.601952230558"},
    {2800, "2550.5801516426727"},
    {2900, "2611.684831033461"},
    {3000, "2767.9159904047847"},
    {3100, "2871.273629758507"},
    {3200, "2939.757749086246"},
    {3300, "3004.3683483917266"},
    {3400, "3116.1054276786745"},
    {3500, "3194.9689869415015"},
    {3600, "3270.9590261820704"},
    {3700, "3386.075545405969"},
    {3800, "3472.318544605747"},
    {3900, "3614.688023785129"},
    {4000, "3710.1839829403907"},
    {4100, "3770.8064220827073"},
    {4200, "3840.555341195315"},
    {4300, "3903.43074028939"},
    {4400, "4004.432619366795"},
    {4500, "4080.5609784163535"},
    {4600, "4162.815817445517"},
    {4700, "4237.197136454284"},
    {4800, "4387.704935438931"},
    {4900, "4515.339214403182"},
    {5000, "4668.099973354489"},
    {5100, "4701.987212274224"},
    {5200, "4785.000931177288"},
    {5300, "4864.1411300599575"},
    {5400, "4946.407808922231"},
    {5500, "5024.800967756659"},
    {5600, "5092.320606570691"},
    {5700, "5189.966725364327"},
    {5800, "5283.739324133843"},
    {5900, "5372.638402897865"},
    {6000, "5461.663961619139"},
    {6100, "5584.8160003349185"},
    {6200, "5704.094519034028"},
    {6300, "5817.499517686665"},
    {6400, "5889.030996344984"},
    {6500, "5922.68895496428"},
    {6600, "6021.473393566906"},
    {6700, "6118.384312145412"},
    {6800, "6168.421710714698"},
    {6900, "6283.585589244962"},
    {7000, "6400.875947766006"},
    {7100, "6518.29278627038"},
    {7200, "6653.8361047282815"},
    {7300, "6694.505903199315"},
    {7400, "6690.302181623876"},
    {7500, "6823.2249400392175"},
    {7600, "6934.2741784229875"},
    {7700, "6989.449896812439"},
    {7800, "7105.752095140517"},
    {7900, "7203.180773489177"},
    {8000, "7327.735931761563"},
    {8100, "7425.41757003963"},
    {8200, "7465.225688330829"},
    {8300, "7518.160286538303"},
    {8400, "7635.2213647812605"},
    {8500, "7777.408922985196"},
    {8600, "7907.72296115756"},
    {8700, "7969.163479298353"},
    {8800, "8033.730477467179"},
    {8900, "8183.423955544829"},
    {9000, "8273.243913665414"},
    {9100, "8375.190351739526"},
    {9200, "8453.263269782066"},
    {9300, "8518.462667807937"},
    {9400, "8665.788545817137"},
    {9500, "8752.240903794765"},
    {9600, "8857.819741755724"},
    {9700, "8879.525059714913"},
    {9800, "8976.356857612729"},
    {9900, "9071.315135538578"},
    {10000, "9078.399893417954"},
    {10100, "9160.61113126576"},
    {10200, "9249.948849096894"},
    {10300, "9370.413046911359"},
    {10400, "9539.003724709153"},
    {10500, "9661.720882475376"},
    {10600, "9680.56452023983"},
    {10700, "9755.53463794291"},
    {10800, "9893.631235688925"},
    {10900, "9887.854313358665"},
    {11000, "10038.203871026635"},
    {11100, "10081.679908663034"},
    {11200, "10150.282426282763"},
    {11300, "10354.011423930526"},
    {11400, "10458.86690145731"},
    {11500, "10527.848859012127"},
    {11600, "10660.957296535373"},
    {11700, "10699.192214086652"},
    {11800, "10822.553611591458"},
    {11900, "10869.041489064693"},
    {12000, "10954.655846476555"},
    {12100, "11035.39668393135"},
    {12200, "11112.264001339674"},
    {12300, "11199.257798731327"},
    {12400, "11223.378076076508"},
    {12500, "11379.62483343482"},
    {12600, "11438.99807074666"},
    {12700, "11593.497788071632"},
    {12800, "11649.123985379934"},
    {12900, "11755.876662611961"},
    {13000, "11857.75581985712"},
    {13100, "11961.761457055807"},
    {13200, "12107.893574267626"},
    {13300, "12203.152171432972"},
    {13400, "12313.537248581648"},
    {13500, "12398.048805713654"},
    {13600, "12485.686842799187"},
    {13700, "12556.451359957457"},
    {13800, "12619.34235700965"},
    {13900, "12732.359834045172"},
    {14000, "12815.503791064024"},
    {14100, "12898.774228066206"},
    {14200, "13036.171145051718"},
    {14300, "13112.69454202056"},
    {14400, "13252.344419002533"},
    {14500, "13359.12077587843"},
    {14600, "13457.02361279726"},
    {14700, "13479.052929669619"},
    {14800, "13522.208726495504"},
    {14900, "13629.491003334522"},
    {15000, "13697.89976015687"},
};

inline constexpr double regression_slope = 0.9147551564680976;
inline constexpr double regression_intercept = -2.038389099852793;

}  // namespace fixtures
