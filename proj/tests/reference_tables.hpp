// Published rank tables (rows n = 2..9), transcribed for comparison.
#ifndef ORR_REFERENCE_TABLES_HPP
#define ORR_REFERENCE_TABLES_HPP

#include <string>
#include <vector>

namespace orr::reference {

// N_k(n), columns k = 2..9.
inline const std::vector<std::vector<long>> witt = {
    {1, 2, 3, 6, 9, 18, 30, 56},
    {3, 8, 18, 48, 116, 312, 810, 2184},
    {6, 20, 60, 204, 670, 2340, 8160, 29120},
    {10, 40, 150, 624, 2580, 11160, 48750, 217000},
    {15, 70, 315, 1554, 7735, 39990, 209790, 1119720},
    {21, 112, 588, 3360, 19544, 117648, 720300, 4483696},
    {28, 168, 1008, 6552, 43596, 299592, 2096640, 14913024},
    {36, 240, 1620, 11808, 88440, 683280, 5380020, 43046640},
};

// D_k(n) = n N_k - N_{k+1}, columns k = 2..9.
inline const std::vector<std::vector<long>> d = {
    {0, 1, 0, 3, 0, 6, 4, 13},
    {1, 6, 6, 28, 36, 126, 246, 672},
    {4, 20, 36, 146, 340, 1200, 3520, 11726},
    {10, 50, 126, 540, 1740, 7050, 26750, 108752},
    {20, 105, 336, 1589, 6420, 30150, 139020, 672483},
    {35, 196, 756, 3976, 19160, 103236, 558404, 3140032},
    {56, 336, 1512, 8820, 49176, 300096, 1860096, 11933292},
    {84, 540, 2772, 17832, 112680, 769500, 5373540, 38747232},
};

// Rank of H_3 of F_n / Gamma_k(F_n), columns k = 2..5.
inline const std::vector<std::vector<std::string>> h3 = {
    {"0", "1⊕0", "0⊕3⊕0", "3⊕0⊕6⊕4"},
    {"1", "6⊕6", "6⊕28⊕36", "28⊕36⊕126⊕246"},
    {"4", "20⊕36", "36⊕146⊕340", "146⊕340⊕1200⊕3520"},
    {"10", "50⊕126", "126⊕540⊕1740", "540⊕1740⊕7050⊕26750"},
    {"20", "105⊕336", "336⊕1589⊕6420", "1589⊕6420⊕30150⊕139020"},
    {"35", "196⊕756", "756⊕3976⊕19160", "3976⊕19160⊕103236⊕558404"},
    {"56", "336⊕1512", "1512⊕8820⊕49176", "8820⊕49176⊕300096⊕1860096"},
    {"84", "540⊕2772", "2772⊕17832⊕112680", "17832⊕112680⊕769500⊕5373540"},
};

}  // namespace orr::reference

#endif
