#pragma once

#include <array>

// Reference bound-state energies (fm^-1) for a = 0.05, M = 1, D = 3..10 and
// (n, l) in the column order below.

namespace kgy::testing {

struct StateLabel {
  int n;
  int l;
};

inline constexpr std::array<StateLabel, 6> kColumns{{{1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}}};

struct ReferenceTable {
  const char* name;
  double v0;
  double s0;
  std::array<std::array<double, 6>, 8> energy;  // [D - 3][column]
};

inline constexpr ReferenceTable kBetaHalf{
    "beta=0.5",
    0.2,
    0.1,
    {{{-0.98885705, -0.98338741, -0.97466557, -0.97487357, -0.96331623, -0.94911313},
      {-0.98646010, -0.97934739, -0.96930758, -0.96939381, -0.95656399, -0.94094526},
      {-0.98323850, -0.97466557, -0.96326494, -0.96331623, -0.94911313, -0.93204148},
      {-0.97928221, -0.96930758, -0.95652848, -0.95656399, -0.94094526, -0.92238088},
      {-0.97462541, -0.96326494, -0.94908636, -0.94911313, -0.93204148, -0.91193997},
      {-0.96927908, -0.95652848, -0.94092392, -0.94094526, -0.92238088, -0.90069216},
      {-0.96324303, -0.94908636, -0.93202380, -0.93204148, -0.91193997, -0.88860737},
      {-0.95651076, -0.94092392, -0.92236581, -0.92238088, -0.90069216, -0.87565154}}}};

inline constexpr ReferenceTable kBetaOne{
    "beta=1",
    0.2,
    0.2,
    {{{-0.99503719, -0.98879900, -0.97999949, -0.97999949, -0.96856958, -0.95441573},
      {-0.99223481, -0.98472320, -0.97461857, -0.97461857, -0.96184005, -0.94628043},
      {-0.98879900, -0.97999949, -0.96856958, -0.96856958, -0.95441573, -0.93741586},
      {-0.98472320, -0.97461857, -0.96184005, -0.96184005, -0.94628043, -0.92780131},
      {-0.97999949, -0.96856958, -0.95441573, -0.95441573, -0.93741586, -0.91741347},
      {-0.97461857, -0.96184005, -0.94628043, -0.94628043, -0.92780131, -0.90622603},
      {-0.96856958, -0.95441573, -0.93741586, -0.93741586, -0.91741347, -0.89420931},
      {-0.96184005, -0.94628043, -0.92780131, -0.92780131, -0.90622603, -0.88132977}}}};

inline constexpr ReferenceTable kBetaMinusOne{
    "beta=-1",
    0.2,
    -0.2,
    {{{-0.95533246, -0.95980903, -0.95464935, -0.95464935, -0.94475060, -0.93125228},
      {-0.95948526, -0.95796541, -0.95018875, -0.95018875, -0.93842313, -0.92325937},
      {-0.95980903, -0.95464935, -0.94475060, -0.94475060, -0.93125228, -0.91445014},
      {-0.95796541, -0.95018875, -0.93842313, -0.93842313, -0.92325937, -0.90481957},
      {-0.95464935, -0.94475060, -0.93125228, -0.93125228, -0.91445014, -0.89435454},
      {-0.95018875, -0.93842313, -0.92325937, -0.92325937, -0.90481957, -0.88303523},
      {-0.94475060, -0.93125228, -0.91445014, -0.91445014, -0.89435454, -0.87083573},
      {-0.93842313, -0.92325937, -0.90481957, -0.90481957, -0.88303523, -0.85772427}}}};

inline constexpr std::array<const ReferenceTable*, 3> kAllTables{&kBetaHalf, &kBetaOne, &kBetaMinusOne};

inline constexpr double kScreening = 0.05;
inline constexpr double kMass = 1.0;

}  // namespace kgy::testing
