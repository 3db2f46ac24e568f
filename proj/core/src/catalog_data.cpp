#include "catalog_data.hpp"

namespace rayleigh::fixtures {

const char* const kGoldens = R"json({
  "s8-shape": "8 elements, rank 4",
  "s8-basis-count": "48",
  "s8-weight-1": "28",
  "s8-weight-8": "20",
  "s8-pair-18": "12",
  "s8-delta-18": "-16",
  "s8-negcorr": "VIOLATED {1,8} -16",
  "s8-balanced": "VIOLATED",
  "a8-shape": "8 elements, rank 4",
  "a8-basis-count": "56",
  "a8-balanced": "HOLDS",
  "a8-delta-78-ones": "112",
  "a8-transitive": "HOLDS",
  "a8-coeff-squares": "2",
  "a8-coeff-allsix": "4",
  "a8-square-certificate": "true",
  "a8-f7-minor": "true",
  "f7-shape": "7 elements, rank 3",
  "f7-basis-count": "28",
  "f7-balanced": "HOLDS",
  "f7dual-balanced": "HOLDS",
  "f7-partial-f126": "0",
  "f7-partial-f12-no6": "2",
  "f7-partial-f16-no2": "2",
  "f7-partial-f26-no1": "2",
  "f7-partial-f1-no26": "-8",
  "f7-partial-f2-no16": "1",
  "f7-partial-f6-no12": "1",
  "f7-partial-f-no126": "-4",
  "f7-strong-poly": "4 * y_6^2 - 16 * y_6",
  "f7-strong-value": "-16",
  "f7-strong-sample": "VIOLATED {1,2} -7",
  "f7-hpp": "VIOLATED {2,3,4} -48",
  "jprime-shape": "8 elements, rank 4",
  "jprime-negcorr": "HOLDS",
  "jprime-delta-18": "0",
  "jprime-delta-47": "224",
  "jprime-delta-25": "225",
  "jprime-table": "28/28",
  "jprime-line-poly": "[1, 1, -3, -4, 1, 3, 1]",
  "jprime-line-factored": "true",
  "jprime-line-t-7-10": "-280041/1000000",
  "jprime-line-t-2-3": "-125/729",
  "jprime-line-t-2": "135",
  "jprime-expand-shape": "17 elements, rank 4",
  "jprime-expand-delta": "-125",
  "jprime-expand-scaled": "-125",
  "jprime-expand-negcorr": "VIOLATED {1,8} -125",
  "p7prime-shape": "7 elements, rank 3",
  "p7prime-basis-count": "31",
  "p7prime-coeff-pairs": "{1,4} {1,7} {2,5} {3,6}",
  "p7prime-sample": "NO_VIOLATION_FOUND",
  "l-shape": "12 elements, rank 4",
  "l-basis-count": "309",
  "l-weight-e": "69",
  "l-weight-f": "147",
  "l-pair-ef": "33",
  "l-delta-ef": "-54",
  "l-negcorr": "VIOLATED {e,f} -54",
  "g23-trees": "8 avoiding, 12 containing",
  "g23-ratio": "2/3",
  "triangle-conductance": "3/2",
  "mono-k4": "HOLDS",
  "mono-g23": "HOLDS",
  "cert-k4-adjacent": "true",
  "cert-k4-disjoint": "true",
  "cert-flip": "true",
  "g24-s8-minor": "false",
  "pg22-shape": "7 elements, rank 3",
  "pg22-iso-f7": "true",
  "pg22-line-partition": "[4, 12, 12]",
  "pg22-line-disc": "-48",
  "pg22-line-roots": "0",
  "pg22-rz": "VIOLATED {1,2,3} -48",
  "pg22-pair-value": "32",
  "pg22-transitive": "HOLDS",
  "pg23-shape": "13 elements, rank 3",
  "pg23-basis-count": "234",
  "pg23-line-partition": "[72, 108, 54]",
  "pg23-line-disc": "-3888",
  "pg23-disc-formula": "-3888",
  "pg23-rz": "VIOLATED",
  "pg23-pair-value": "810",
  "pg23-transitive": "HOLDS",
  "u24-coeff-cert": "CERTIFIED",
  "u24-hpp": "NO_VIOLATION_FOUND",
  "k4-hpp": "NO_VIOLATION_FOUND",
  "uniform-transitive": "HOLDS (15 cases)",
  "twosum-shape": "11 elements, rank 5",
  "twosum-basis-count": "224",
  "twosum-s8-minor": "false",
  "twosum-negcorr": "HOLDS",
  "twosum-sample": "NO_VIOLATION_FOUND"
})json";

const char* const kA8Certificate =
    "{\"squares\":["
    "{\"coeff\":\"1\",\"poly\":\"y_1 * y_4 * y_6 - y_3 * y_5 * y_6\"},"
    "{\"coeff\":\"1\",\"poly\":\"y_1 * y_2 * y_6 - y_1 * y_3 * y_5\"},"
    "{\"coeff\":\"1\",\"poly\":\"y_2 * y_5 * y_6 - y_1 * y_4 * y_5\"},"
    "{\"coeff\":\"1\",\"poly\":\"y_2 * y_3 * y_6 - y_1 * y_3 * y_4\"},"
    "{\"coeff\":\"1\",\"poly\":\"y_2 * y_4 * y_6 - y_3 * y_4 * y_5\"},"
    "{\"coeff\":\"1\",\"poly\":\"y_1 * y_2 * y_4 - y_2 * y_3 * y_5\"}"
    "],\"remainder\":\""
    "2 * y_1^2 * y_2^2 * y_4 * y_6"
    " + 2 * y_1^2 * y_2 * y_3 * y_4^2"
    " + 2 * y_1^2 * y_2 * y_3 * y_4 * y_5"
    " + 2 * y_1^2 * y_2 * y_3 * y_4 * y_6"
    " + 2 * y_1^2 * y_2 * y_4^2 * y_5"
    " + 2 * y_1^2 * y_2 * y_4^2 * y_6"
    " + 2 * y_1^2 * y_2 * y_4 * y_5 * y_6"
    " + 2 * y_1^2 * y_2 * y_4 * y_6^2"
    " + 2 * y_1^2 * y_3^2 * y_4 * y_5"
    " + 2 * y_1^2 * y_3 * y_4^2 * y_5"
    " + 2 * y_1^2 * y_3 * y_4^2 * y_6"
    " + 2 * y_1^2 * y_3 * y_4 * y_5^2"
    " + 2 * y_1^2 * y_3 * y_4 * y_5 * y_6"
    " + 2 * y_1^2 * y_4^2 * y_5 * y_6"
    " + 2 * y_1 * y_2^2 * y_3 * y_4 * y_6"
    " + 2 * y_1 * y_2^2 * y_3 * y_5 * y_6"
    " + 2 * y_1 * y_2^2 * y_3 * y_6^2"
    " + 2 * y_1 * y_2^2 * y_4^2 * y_6"
    " + 2 * y_1 * y_2^2 * y_4 * y_5 * y_6"
    " + 2 * y_1 * y_2^2 * y_4 * y_6^2"
    " + 2 * y_1 * y_2^2 * y_5 * y_6^2"
    " + 2 * y_1 * y_2 * y_3^2 * y_4 * y_5"
    " + 2 * y_1 * y_2 * y_3^2 * y_5^2"
    " + 2 * y_1 * y_2 * y_3^2 * y_5 * y_6"
    " + 2 * y_1 * y_2 * y_3 * y_4^2 * y_5"
    " + 2 * y_1 * y_2 * y_3 * y_4^2 * y_6"
    " + 2 * y_1 * y_2 * y_3 * y_4 * y_5^2"
    " + 4 * y_1 * y_2 * y_3 * y_4 * y_5 * y_6"
    " + 2 * y_1 * y_2 * y_3 * y_4 * y_6^2"
    " + 2 * y_1 * y_2 * y_3 * y_5^2 * y_6"
    " + 2 * y_1 * y_2 * y_3 * y_5 * y_6^2"
    " + 2 * y_1 * y_2 * y_4^2 * y_5 * y_6"
    " + 2 * y_1 * y_2 * y_4^2 * y_6^2"
    " + 2 * y_1 * y_2 * y_4 * y_5 * y_6^2"
    " + 2 * y_1 * y_3^2 * y_4^2 * y_5"
    " + 2 * y_1 * y_3^2 * y_4 * y_5^2"
    " + 2 * y_1 * y_3^2 * y_4 * y_5 * y_6"
    " + 2 * y_1 * y_3^2 * y_5^2 * y_6"
    " + 2 * y_1 * y_3 * y_4^2 * y_5^2"
    " + 2 * y_1 * y_3 * y_4^2 * y_5 * y_6"
    " + 2 * y_1 * y_3 * y_4 * y_5^2 * y_6"
    " + 2 * y_2^2 * y_3^2 * y_5 * y_6"
    " + 2 * y_2^2 * y_3 * y_4 * y_5 * y_6"
    " + 2 * y_2^2 * y_3 * y_4 * y_6^2"
    " + 2 * y_2^2 * y_3 * y_5^2 * y_6"
    " + 2 * y_2^2 * y_3 * y_5 * y_6^2"
    " + 2 * y_2^2 * y_4 * y_5 * y_6^2"
    " + 2 * y_2 * y_3^2 * y_4 * y_5^2"
    " + 2 * y_2 * y_3^2 * y_4 * y_5 * y_6"
    " + 2 * y_2 * y_3^2 * y_5^2 * y_6"
    " + 2 * y_2 * y_3^2 * y_5 * y_6^2"
    " + 2 * y_2 * y_3 * y_4 * y_5^2 * y_6"
    " + 2 * y_2 * y_3 * y_4 * y_5 * y_6^2"
    " + 2 * y_2 * y_3 * y_5^2 * y_6^2"
    " + 2 * y_3^2 * y_4 * y_5^2 * y_6"
    "\"}";

const char* const kJPrimeTable = R"json({
  "1,2": "100", "1,3": "100", "1,4": "120", "1,5": "100",
  "1,6": "100", "1,7": "80", "1,8": "0",
  "2,3": "25", "2,4": "50", "2,5": "225", "2,6": "75",
  "2,7": "50", "2,8": "100",
  "3,4": "50", "3,5": "75", "3,6": "225", "3,7": "50", "3,8": "100",
  "4,5": "50", "4,6": "50", "4,7": "224", "4,8": "80",
  "5,6": "25", "5,7": "50", "5,8": "100",
  "6,7": "50", "6,8": "100",
  "7,8": "120"
})json";

}  // namespace rayleigh::fixtures
