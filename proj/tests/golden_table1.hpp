#pragma once

#include <array>
#include <cstdint>

namespace gadic::testing {

// Reference table of lambda_p(k): rows k = 1..20, columns the primes below 30.
inline constexpr std::array<std::int64_t, 10> kTable1Bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29};

inline constexpr std::int64_t kTable1[20][10] = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {3, 2, 2, 2, 2, 2, 2, 2, 2, 2},
    {11, 5, 3, 3, 3, 3, 3, 3, 3, 3},
    {43, 14, 8, 4, 4, 4, 4, 4, 4, 4},
    {171, 41, 13, 11, 5, 5, 5, 5, 5, 5},
    {683, 122, 38, 18, 6, 6, 6, 6, 6, 6},
    {2731, 365, 63, 25, 17, 7, 7, 7, 7, 7},
    {10923, 1094, 188, 74, 28, 20, 8, 8, 8, 8},
    {43691, 3281, 313, 123, 39, 33, 9, 9, 9, 9},
    {174763, 9842, 938, 172, 50, 46, 26, 10, 10, 10},
    {699051, 29525, 1563, 515, 61, 59, 43, 29, 11, 11},
    {2796203, 88574, 4688, 858, 182, 72, 60, 48, 12, 12},
    {11184811, 265721, 7813, 1201, 303, 85, 77, 67, 35, 13},
    {44739243, 797162, 23438, 3602, 424, 254, 94, 86, 58, 14},
    {178956971, 2391485, 39063, 6003, 545, 423, 111, 105, 81, 15},
    {715827883, 7174454, 117188, 8404, 666, 592, 128, 124, 104, 44},
    {2863311531, 21523361, 195313, 25211, 1997, 761, 145, 143, 127, 73},
    {11453246123, 64570082, 585938, 42018, 3328, 930, 434, 162, 150, 102},
    {45812984491, 193710245, 976563, 58825, 4659, 1099, 723, 181, 173, 131},
    {183251937963, 581130734, 2929688, 176474, 5990, 3296, 1012, 542, 196, 160},
};

}  // namespace gadic::testing
