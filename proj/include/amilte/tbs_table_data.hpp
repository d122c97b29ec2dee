#pragma once

#include <array>

// Uplink transport block sizes (bits per TTI), single transmission layer,
// TBS indices 0-26 over 1-100 physical resource blocks, together with the
// uplink MCS index -> (modulation order, TBS index) map. A machine-readable
// copy ships as fixtures/tbs_uplink.tsv; integrity is checked against the
// FNV-1a digest below.

namespace amilte::detail {

inline constexpr int kTbsRows = 27;
inline constexpr int kTbsPrbs = 100;

// Transport block bits per TTI, indexed [i_tbs][n_prb - 1].
inline constexpr std::array<std::array<int, kTbsPrbs>, kTbsRows> kTbsBits = {{
    {16, 32, 56, 88, 120, 152, 176, 208, 224, 256, 280, 304, 328, 352, 384, 408, 432, 456, 480, 504,
     536, 552, 584, 600, 632, 664, 680, 712, 728, 760, 792, 808, 840, 856, 888, 920, 936, 968, 984,
     1000, 1032, 1064, 1096, 1096, 1128, 1160, 1192, 1224, 1224, 1256, 1288, 1320, 1352, 1352, 1384,
     1416, 1448, 1480, 1480, 1512, 1544, 1576, 1608, 1608, 1640, 1672, 1704, 1736, 1736, 1768, 1800,
     1832, 1864, 1864, 1896, 1928, 1960, 1992, 1992, 2024, 2024, 2088, 2088, 2088, 2152, 2152, 2216,
     2216, 2216, 2280, 2280, 2344, 2344, 2344, 2408, 2408, 2472, 2472, 2472, 2536},
    {24, 56, 88, 144, 176, 208, 224, 256, 328, 344, 376, 408, 440, 480, 504, 536, 584, 616, 648, 680,
     712, 744, 776, 824, 856, 888, 920, 952, 984, 1032, 1064, 1096, 1128, 1160, 1192, 1224, 1256,
     1288, 1320, 1352, 1384, 1416, 1448, 1512, 1544, 1576, 1608, 1640, 1672, 1704, 1736, 1768, 1800,
     1832, 1864, 1896, 1960, 1992, 2024, 2024, 2088, 2088, 2152, 2152, 2216, 2216, 2280, 2280, 2344,
     2408, 2408, 2472, 2472, 2536, 2536, 2600, 2600, 2664, 2664, 2728, 2728, 2792, 2792, 2856, 2920,
     2920, 2984, 2984, 3048, 3048, 3112, 3112, 3176, 3176, 3240, 3240, 3304, 3368, 3368, 3432},
    {32, 72, 144, 176, 208, 256, 296, 328, 376, 424, 464, 504, 536, 584, 632, 664, 712, 760, 792, 840,
     888, 920, 968, 1000, 1032, 1096, 1128, 1160, 1224, 1256, 1288, 1352, 1384, 1416, 1480, 1512,
     1544, 1608, 1640, 1672, 1736, 1768, 1800, 1864, 1896, 1928, 1992, 2024, 2024, 2088, 2152, 2152,
     2216, 2280, 2280, 2344, 2408, 2408, 2472, 2536, 2536, 2600, 2664, 2664, 2728, 2792, 2792, 2856,
     2920, 2920, 2984, 3048, 3048, 3112, 3176, 3176, 3240, 3304, 3304, 3368, 3432, 3432, 3496, 3560,
     3560, 3624, 3688, 3688, 3752, 3816, 3816, 3880, 3880, 3944, 4008, 4008, 4072, 4152, 4152, 4200},
    {40, 104, 176, 208, 256, 328, 392, 440, 504, 568, 616, 680, 728, 792, 840, 904, 952, 1000, 1064,
     1128, 1192, 1224, 1288, 1352, 1416, 1448, 1512, 1576, 1640, 1704, 1736, 1800, 1864, 1928, 1960,
     2024, 2088, 2152, 2152, 2216, 2280, 2344, 2408, 2472, 2536, 2600, 2664, 2664, 2728, 2792, 2856,
     2920, 2984, 3048, 3112, 3176, 3176, 3240, 3304, 3368, 3432, 3496, 3560, 3624, 3688, 3688, 3752,
     3816, 3880, 3944, 4008, 4072, 4136, 4200, 4200, 4280, 4328, 4408, 4456, 4536, 4584, 4648, 4712,
     4712, 4792, 4840, 4920, 4968, 5048, 5096, 5160, 5224, 5224, 5304, 5352, 5432, 5480, 5560, 5608,
     5672},
    {56, 120, 208, 256, 328, 408, 488, 552, 632, 696, 760, 824, 904, 968, 1032, 1096, 1160, 1224,
     1320, 1384, 1448, 1512, 1576, 1640, 1736, 1800, 1864, 1928, 1992, 2088, 2152, 2216, 2280, 2344,
     2408, 2472, 2536, 2600, 2664, 2728, 2792, 2920, 2984, 3048, 3112, 3176, 3240, 3304, 3368, 3432,
     3496, 3560, 3688, 3752, 3816, 3880, 3944, 4008, 4072, 4152, 4200, 4280, 4328, 4408, 4520, 4584,
     4648, 4712, 4792, 4840, 4920, 4968, 5048, 5096, 5176, 5288, 5352, 5416, 5480, 5560, 5608, 5688,
     5736, 5816, 5864, 5944, 5992, 6120, 6120, 6240, 6328, 6328, 6456, 6456, 6584, 6624, 6712, 6816,
     6840, 6840},
    {72, 144, 224, 328, 424, 504, 600, 680, 776, 872, 952, 1032, 1128, 1192, 1288, 1384, 1480, 1544,
     1640, 1736, 1800, 1896, 1992, 2088, 2152, 2216, 2344, 2408, 2472, 2600, 2664, 2728, 2856, 2920,
     3048, 3112, 3176, 3304, 3368, 3432, 3560, 3624, 3688, 3816, 3880, 4008, 4072, 4152, 4264, 4328,
     4408, 4520, 4584, 4664, 4792, 4840, 4968, 5048, 5096, 5224, 5304, 5352, 5480, 5560, 5608, 5736,
     5816, 5928, 5992, 6072, 6120, 6240, 6328, 6432, 6456, 6624, 6712, 6712, 6840, 6968, 7008, 7096,
     7224, 7224, 7392, 7480, 7584, 7608, 7736, 7776, 7864, 7992, 7992, 8160, 8248, 8352, 8376, 8544,
     8632, 8632},
    {88, 176, 256, 392, 504, 600, 712, 808, 936, 1032, 1128, 1224, 1320, 1416, 1544, 1640, 1736, 1832,
     1960, 2024, 2152, 2216, 2344, 2472, 2536, 2664, 2728, 2856, 2984, 3048, 3176, 3240, 3368, 3496,
     3560, 3688, 3816, 3880, 4008, 4072, 4200, 4328, 4408, 4536, 4584, 4712, 4840, 4920, 5048, 5160,
     5224, 5352, 5432, 5560, 5672, 5736, 5864, 5944, 6072, 6120, 6240, 6328, 6456, 6584, 6624, 6712,
     6840, 7008, 7096, 7224, 7224, 7392, 7480, 7608, 7736, 7776, 7864, 7992, 8120, 8248, 8352, 8376,
     8544, 8632, 8760, 8840, 8928, 9016, 9144, 9272, 9352, 9400, 9528, 9696, 9784, 9888, 9912, 10080,
     10168, 10296},
    {104, 224, 328, 472, 584, 712, 840, 968, 1096, 1224, 1320, 1448, 1576, 1704, 1832, 1928, 2024,
     2152, 2280, 2408, 2536, 2664, 2792, 2920, 3048, 3176, 3304, 3368, 3496, 3624, 3752, 3880, 4008,
     4152, 4280, 4392, 4520, 4648, 4712, 4840, 4968, 5096, 5224, 5352, 5480, 5608, 5736, 5864, 5992,
     6120, 6240, 6328, 6456, 6584, 6712, 6840, 6968, 7096, 7200, 7224, 7392, 7584, 7608, 7776, 7864,
     7992, 8160, 8248, 8376, 8544, 8632, 8760, 8928, 9016, 9144, 9272, 9400, 9528, 9656, 9784, 9912,
     9912, 10120, 10272, 10376, 10464, 10632, 10736, 10888, 10936, 11064, 11232, 11376, 11448, 11616,
     11704, 11832, 11960, 12088, 12216},
    {120, 256, 392, 536, 680, 808, 968, 1096, 1256, 1384, 1512, 1640, 1768, 1928, 2024, 2152, 2344,
     2472, 2600, 2728, 2856, 2984, 3176, 3304, 3432, 3560, 3688, 3816, 4008, 4152, 4280, 4408, 4536,
     4664, 4840, 4968, 5096, 5224, 5352, 5480, 5672, 5800, 5944, 6072, 6200, 6328, 6456, 6624, 6712,
     6840, 7008, 7096, 7224, 7392, 7608, 7736, 7864, 7992, 8160, 8248, 8376, 8544, 8632, 8840, 8928,
     9120, 9272, 9400, 9528, 9656, 9784, 9912, 10080, 10168, 10376, 10464, 10656, 10736, 10888, 11064,
     11192, 11320, 11448, 11616, 11704, 11832, 12016, 12168, 12216, 12424, 12576, 12680, 12768, 12976,
     12976, 13272, 13344, 13536, 13656, 13728},
    {136, 296, 456, 616, 776, 936, 1096, 1256, 1416, 1544, 1672, 1832, 1992, 2152, 2280, 2408, 2600,
     2728, 2920, 3048, 3240, 3368, 3496, 3688, 3816, 4008, 4152, 4280, 4456, 4584, 4776, 4920, 5048,
     5224, 5352, 5544, 5688, 5864, 5992, 6120, 6328, 6456, 6624, 6712, 6840, 7096, 7224, 7392, 7480,
     7608, 7864, 7992, 8160, 8328, 8376, 8632, 8760, 8928, 9096, 9144, 9400, 9528, 9696, 9864, 9912,
     10168, 10296, 10464, 10632, 10808, 10936, 11064, 11232, 11424, 11576, 11704, 11832, 12016, 12192,
     12336, 12504, 12656, 12768, 12960, 12976, 13272, 13344, 13536, 13728, 13728, 14040, 14112, 14304,
     14496, 14592, 14808, 14896, 15072, 15264, 15264},
    {144, 328, 504, 680, 872, 1032, 1224, 1384, 1544, 1736, 1896, 2024, 2216, 2408, 2600, 2728, 2920,
     3112, 3240, 3432, 3624, 3816, 3944, 4152, 4328, 4456, 4664, 4840, 5032, 5176, 5352, 5544, 5688,
     5864, 6072, 6240, 6328, 6584, 6712, 6840, 7096, 7224, 7392, 7608, 7776, 7968, 8120, 8328, 8504,
     8632, 8840, 9016, 9144, 9352, 9528, 9696, 9888, 10040, 10168, 10416, 10552, 10736, 10936, 11064,
     11232, 11448, 11616, 11704, 11960, 12088, 12216, 12424, 12656, 12768, 12976, 13192, 13344, 13536,
     13704, 13728, 14040, 14216, 14304, 14576, 14728, 14896, 15072, 15264, 15264, 15576, 15752, 15960,
     16032, 16264, 16416, 16608, 16832, 16992, 17184, 17288},
    {176, 376, 584, 776, 1000, 1192, 1384, 1608, 1800, 2024, 2216, 2408, 2600, 2792, 2984, 3176, 3432,
     3624, 3816, 4008, 4200, 4408, 4648, 4840, 5048, 5224, 5432, 5608, 5864, 6072, 6240, 6456, 6624,
     6840, 7008, 7224, 7480, 7608, 7864, 7992, 8248, 8376, 8632, 8888, 9096, 9272, 9504, 9696, 9912,
     10120, 10296, 10464, 10680, 10888, 11064, 11320, 11448, 11704, 11912, 12088, 12336, 12504, 12680,
     12936, 13152, 13344, 13536, 13728, 13960, 14112, 14304, 14496, 14728, 14896, 15072, 15264, 15576,
     15752, 15960, 16176, 16384, 16520, 16776, 16992, 17192, 17376, 17568, 17800, 17952, 18216, 18416,
     18568, 18768, 18824, 19080, 19416, 19592, 19800, 20016, 20184},
    {208, 440, 680, 904, 1128, 1352, 1608, 1800, 2024, 2280, 2472, 2728, 2920, 3176, 3368, 3624, 3816,
     4072, 4328, 4536, 4776, 4968, 5224, 5432, 5688, 5928, 6120, 6328, 6584, 6840, 7008, 7224, 7480,
     7736, 7968, 8160, 8376, 8632, 8888, 9120, 9312, 9528, 9784, 9912, 10168, 10464, 10680, 10936,
     11144, 11400, 11616, 11832, 12016, 12216, 12504, 12768, 12976, 13192, 13448, 13656, 13728, 14112,
     14304, 14592, 14808, 15040, 15264, 15496, 15648, 15960, 16176, 16416, 16608, 16832, 17032, 17288,
     17544, 17776, 17952, 18216, 18416, 18648, 18824, 19080, 19376, 19592, 19800, 20016, 20264, 20496,
     20656, 20976, 21128, 21384, 21648, 21800, 22104, 22312, 22488, 22800},
    {224, 488, 744, 1000, 1256, 1544, 1800, 2024, 2280, 2536, 2728, 2984, 3240, 3496, 3752, 4008,
     4280, 4536, 4792, 5048, 5304, 5560, 5816, 6072, 6328, 6584, 6840, 7096, 7352, 7608, 7776, 7992,
     8352, 8584, 8840, 9120, 9352, 9608, 9888, 10120, 10376, 10632, 10888, 11144, 11400, 11656, 11912,
     12168, 12424, 12680, 12888, 13152, 13344, 13656, 13936, 14112, 14424, 14688, 14896, 15216, 15456,
     15648, 15960, 16224, 16416, 16728, 16832, 17192, 17496, 17728, 17952, 18216, 18416, 18736, 18824,
     19240, 19520, 19752, 20016, 20264, 20496, 20776, 20976, 21296, 21496, 21800, 21936, 22312, 22488,
     22824, 22944, 23256, 23552, 23688, 24056, 24200, 24528, 24816, 25104, 25344},
    {256, 552, 840, 1128, 1416, 1736, 2024, 2280, 2600, 2856, 3112, 3368, 3688, 3944, 4280, 4536,
     4840, 5096, 5416, 5688, 5992, 6240, 6456, 6840, 7096, 7392, 7608, 7992, 8248, 8544, 8840, 9120,
     9400, 9696, 9912, 10272, 10552, 10848, 11064, 11424, 11704, 11960, 12216, 12504, 12768, 12976,
     13344, 13704, 13960, 14256, 14496, 14808, 15072, 15264, 15648, 15960, 16264, 16520, 16832, 17136,
     17376, 17704, 17952, 18264, 18416, 18824, 19080, 19416, 19696, 19968, 20264, 20496, 20776, 21128,
     21384, 21648, 21936, 22256, 22488, 22824, 23104, 23416, 23688, 23952, 24200, 24528, 24816, 25104,
     25384, 25680, 25976, 26256, 26464, 26832, 27120, 27408, 27696, 27984, 28248, 28560},
    {280, 600, 904, 1224, 1544, 1800, 2152, 2472, 2728, 3112, 3368, 3688, 4008, 4328, 4664, 4968,
     5288, 5560, 5864, 6200, 6456, 6840, 7096, 7392, 7776, 7992, 8376, 8632, 9016, 9312, 9608, 9912,
     10168, 10552, 10888, 11192, 11448, 11808, 12088, 12424, 12680, 12976, 13344, 13656, 13960, 14304,
     14592, 14896, 15240, 15536, 15856, 16176, 16416, 16800, 17112, 17376, 17728, 17952, 18336, 18648,
     18824, 19240, 19592, 19848, 20184, 20496, 20776, 21128, 21384, 21760, 21936, 22312, 22664, 22944,
     23336, 23648, 23952, 24200, 24528, 24896, 25176, 25456, 25800, 26096, 26416, 26736, 27056, 27376,
     27696, 27984, 28248, 28576, 28928, 29208, 29480, 29824, 30168, 30456, 30720, 31096},
    {328, 632, 968, 1288, 1608, 1928, 2280, 2600, 2984, 3240, 3560, 3880, 4200, 4536, 4840, 5176,
     5480, 5816, 6120, 6456, 6712, 7096, 7392, 7776, 7992, 8376, 8736, 9016, 9352, 9696, 10040, 10296,
     10680, 10936, 11320, 11656, 11960, 12216, 12576, 12960, 13272, 13536, 13920, 14256, 14576, 14896,
     15216, 15536, 15856, 16176, 16520, 16832, 17136, 17496, 17800, 18144, 18416, 18768, 19080, 19416,
     19752, 20016, 20360, 20656, 20976, 21384, 21648, 21936, 22312, 22664, 22944, 23256, 23648, 23952,
     24200, 24528, 24896, 25176, 25560, 25896, 26240, 26568, 26832, 27168, 27480, 27864, 28104, 28480,
     28784, 29136, 29480, 29784, 30104, 30456, 30720, 31096, 31392, 31736, 32064, 32376},
    {336, 696, 1064, 1416, 1800, 2152, 2536, 2856, 3240, 3624, 3944, 4328, 4664, 5048, 5432, 5736,
     6120, 6456, 6840, 7224, 7608, 7968, 8328, 8632, 9016, 9400, 9784, 10120, 10464, 10848, 11232,
     11576, 11912, 12216, 12680, 12976, 13344, 13728, 14112, 14496, 14808, 15216, 15576, 15936, 16264,
     16608, 17032, 17376, 17728, 18096, 18416, 18824, 19080, 19520, 19920, 20264, 20656, 20976, 21336,
     21720, 22104, 22408, 22824, 23176, 23552, 23856, 24200, 24528, 24896, 25344, 25680, 25976, 26416,
     26736, 27168, 27480, 27896, 28248, 28576, 28976, 29296, 29712, 29992, 30408, 30720, 31096, 31528,
     31736, 32112, 32592, 32960, 33240, 33688, 34008, 34392, 34776, 35136, 35480, 35784, 36216},
    {376, 776, 1160, 1544, 1992, 2344, 2792, 3112, 3624, 4008, 4408, 4792, 5176, 5608, 5992, 6328,
     6712, 7200, 7608, 7992, 8376, 8760, 9144, 9608, 9912, 10416, 10808, 11192, 11616, 12016, 12424,
     12768, 13192, 13616, 13960, 14424, 14808, 15216, 15576, 16032, 16416, 16832, 17192, 17568, 17952,
     18416, 18824, 19080, 19592, 20016, 20416, 20776, 21128, 21640, 21936, 22408, 22824, 23216, 23640,
     24024, 24448, 24816, 25176, 25560, 25976, 26416, 26832, 27168, 27584, 28032, 28456, 28784, 29208,
     29640, 29992, 30456, 30720, 31176, 31616, 32064, 32376, 32856, 33240, 33656, 34008, 34392, 34776,
     35200, 35648, 36048, 36376, 36856, 37272, 37672, 38016, 38432, 38856, 39232, 39624, 40080},
    {408, 840, 1288, 1736, 2152, 2600, 2984, 3496, 3880, 4264, 4664, 5096, 5480, 5944, 6328, 6816,
     7224, 7608, 7992, 8504, 8928, 9352, 9784, 10168, 10656, 11064, 11448, 11912, 12336, 12768, 13192,
     13616, 14040, 14496, 14896, 15264, 15752, 16176, 16608, 17032, 17456, 17880, 18312, 18736, 19080,
     19592, 20016, 20416, 20872, 21312, 21720, 22152, 22576, 22944, 23432, 23856, 24200, 24696, 25136,
     25560, 25976, 26416, 26832, 27256, 27696, 28104, 28560, 28976, 29400, 29824, 30272, 30688, 31096,
     31528, 31944, 32376, 32800, 33240, 33656, 34088, 34392, 34936, 35200, 35784, 36216, 36648, 37056,
     37496, 37936, 38352, 38784, 39208, 39624, 40080, 40432, 40896, 41336, 41768, 42096, 42616},
    {440, 904, 1384, 1864, 2344, 2792, 3240, 3752, 4136, 4584, 5032, 5480, 5944, 6328, 6840, 7224,
     7776, 8248, 8632, 9144, 9608, 10080, 10464, 10936, 11448, 11912, 12336, 12768, 13272, 13728,
     14112, 14592, 15072, 15576, 16032, 16496, 16832, 17376, 17800, 18336, 18768, 19240, 19696, 20104,
     20616, 21072, 21496, 21936, 22408, 22920, 23376, 23688, 24200, 24696, 25176, 25560, 26096, 26568,
     26920, 27480, 27952, 28336, 28872, 29296, 29784, 30168, 30688, 31168, 31616, 32088, 32512, 32960,
     33408, 33856, 34320, 34776, 35200, 35648, 36136, 36648, 37104, 37496, 38016, 38432, 38928, 39416,
     39840, 40232, 40744, 41256, 41472, 42096, 42616, 42960, 43544, 43896, 44440, 44840, 45352, 45840},
    {488, 1000, 1480, 1992, 2472, 2984, 3496, 4008, 4584, 4968, 5432, 5944, 6456, 6840, 7392, 7864,
     8376, 8928, 9400, 9912, 10424, 10888, 11424, 11912, 12384, 12888, 13344, 13728, 14304, 14896,
     15264, 15856, 16384, 16832, 17376, 17880, 18336, 18824, 19344, 19848, 20360, 20864, 21336, 21800,
     22312, 22824, 23336, 23688, 24200, 24816, 25336, 25800, 26328, 26736, 27256, 27696, 28248, 28784,
     29296, 29784, 30288, 30720, 31296, 31736, 32256, 32712, 33240, 33776, 34248, 34776, 35200, 35648,
     36216, 36696, 37200, 37728, 38184, 38696, 39232, 39720, 40232, 40696, 41232, 41472, 42096, 42696,
     42960, 43544, 44112, 44688, 45176, 45696, 46176, 46656, 47128, 47616, 48144, 48576, 49016, 49656},
    {520, 1064, 1608, 2152, 2664, 3240, 3752, 4264, 4776, 5352, 5864, 6328, 6840, 7480, 7992, 8544,
     9096, 9608, 10168, 10680, 11232, 11704, 12216, 12768, 13344, 13728, 14424, 14984, 15496, 16032,
     16520, 17112, 17568, 18176, 18728, 19240, 19800, 20336, 20872, 21384, 21936, 22408, 22944, 23536,
     24056, 24528, 25136, 25680, 26096, 26736, 27256, 27696, 28336, 28872, 29400, 29936, 30504, 31016,
     31528, 32112, 32592, 33168, 33688, 34248, 34776, 35200, 35784, 36376, 36856, 37440, 37936, 38432,
     39064, 39600, 40128, 40656, 41160, 41472, 42280, 42816, 43304, 43816, 44328, 44840, 45472, 45864,
     46536, 47096, 47616, 48144, 48576, 49016, 49696, 50296, 50712, 51248, 51912, 52416, 52912, 53496},
    {552, 1128, 1736, 2280, 2856, 3496, 4008, 4584, 5160, 5736, 6240, 6840, 7392, 7992, 8584, 9144,
     9696, 10296, 10888, 11448, 12016, 12576, 13192, 13728, 14304, 14896, 15456, 16032, 16608, 17192,
     17776, 18336, 18824, 19416, 20016, 20616, 21128, 21760, 22312, 22944, 23432, 24056, 24528, 25176,
     25800, 26328, 26920, 27480, 28104, 28656, 29208, 29824, 30288, 30936, 31528, 32112, 32592, 33240,
     33776, 34392, 34936, 35544, 36136, 36696, 37272, 37776, 38352, 38976, 39504, 40128, 40696, 41264,
     41856, 42384, 42960, 43544, 44112, 44736, 45264, 45864, 46456, 46992, 47584, 48144, 48752, 49296,
     49872, 50448, 51024, 51608, 52176, 52752, 53328, 53904, 54480, 55056, 55416, 56088, 56736, 57336},
    {584, 1192, 1800, 2408, 2984, 3624, 4264, 4968, 5544, 5992, 6584, 7096, 7776, 8376, 8928, 9528,
     10168, 10736, 11376, 11960, 12576, 13152, 13728, 14304, 14896, 15576, 16176, 16776, 17376, 17952,
     18568, 19080, 19752, 20360, 20952, 21496, 22152, 22664, 23336, 23952, 24528, 25136, 25760, 26328,
     26920, 27480, 28104, 28656, 29296, 29936, 30552, 31096, 31736, 32256, 32944, 33504, 34088, 34752,
     35200, 35928, 36544, 37104, 37728, 38336, 38928, 39504, 40128, 40744, 41336, 41928, 42384, 42960,
     43544, 44328, 44840, 45472, 45864, 46656, 47304, 47920, 48424, 49016, 49696, 50296, 50712, 51456,
     52080, 52680, 53328, 53920, 54480, 55056, 55416, 56256, 56736, 57440, 58056, 58616, 59256, 59896},
    {616, 1256, 1864, 2536, 3112, 3752, 4392, 5160, 5736, 6200, 6816, 7392, 7992, 8632, 9272, 9912,
     10464, 11144, 11704, 12384, 12976, 13616, 14256, 14880, 15496, 16032, 16728, 17288, 17952, 18568,
     19080, 19800, 20416, 21072, 21648, 22312, 22920, 23552, 24176, 24792, 25384, 25976, 26616, 27256,
     27896, 28480, 29136, 29712, 30288, 31000, 31616, 32112, 32856, 33480, 34088, 34608, 35200, 35928,
     36552, 37200, 37776, 38432, 38976, 39680, 40232, 40896, 41472, 42096, 42696, 43360, 43896, 44592,
     45176, 45864, 46456, 47096, 47736, 48288, 48936, 49584, 49872, 50712, 51456, 52080, 52680, 53216,
     53920, 54480, 55056, 55752, 56256, 56984, 57440, 58176, 58848, 59256, 60096, 60568, 61232, 61896},
    {712, 1480, 2216, 2984, 3752, 4392, 5160, 5992, 6712, 7480, 8160, 8928, 9696, 10464, 11192, 11960,
     12680, 13448, 14112, 14896, 15648, 16416, 17192, 17952, 18648, 19416, 20184, 20872, 21648, 22408,
     23176, 23856, 24528, 25384, 26096, 26920, 27584, 28336, 29136, 29824, 30576, 31392, 32112, 32856,
     33656, 34392, 35136, 35784, 36648, 37320, 38136, 38856, 39624, 40392, 41024, 41856, 42616, 43360,
     44112, 44840, 45472, 46376, 47096, 47736, 48576, 49296, 49872, 50712, 51608, 52216, 52912, 53744,
     54576, 55328, 56088, 56736, 57440, 58176, 58848, 59672, 60568, 61232, 62064, 62664, 63432, 64200,
     65048, 65736, 66504, 67296, 68040, 68808, 69552, 69696, 70656, 71616, 72216, 73112, 74008, 74544},
}};

// FNV-1a 64 of fixtures/tbs_uplink.tsv.
inline constexpr unsigned long long kTbsFixtureFnv64 = 0x77aa9534181e3d0fULL;

// Uplink I_MCS -> (modulation bits per symbol, I_TBS), indices 0-28.
struct McsMapEntry {
  int i_mcs;
  int modulation_order;  // 2 = QPSK, 4 = 16QAM, 6 = 64QAM
  int i_tbs;
};

inline constexpr std::array<McsMapEntry, 29> kUplinkMcsMap = {{
    {0, 2, 0},   {1, 2, 1},   {2, 2, 2},   {3, 2, 3},   {4, 2, 4},
    {5, 2, 5},   {6, 2, 6},   {7, 2, 7},   {8, 2, 8},   {9, 2, 9},
    {10, 2, 10}, {11, 4, 10}, {12, 4, 11}, {13, 4, 12}, {14, 4, 13},
    {15, 4, 14}, {16, 4, 15}, {17, 4, 16}, {18, 4, 17}, {19, 4, 18},
    {20, 4, 19}, {21, 6, 19}, {22, 6, 20}, {23, 6, 21}, {24, 6, 22},
    {25, 6, 23}, {26, 6, 24}, {27, 6, 25}, {28, 6, 26},
}};

}  // namespace amilte::detail
