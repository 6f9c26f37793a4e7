// Generated by gen_weil_table; do not edit.
#include "weil_table.hpp"

namespace tendo::detail {

namespace {

constexpr WeilTableRow kRows[] = {
    {2, {1, 7, 1, 7, 1, 7, 5, 3}},
    {3, {0, 0, 2, 6, 0, 0, 0, 0}},
    {5, {0, 0, 0, 4, 0, 0, 0, 0}},
    {7, {0, 0, 2, 6, 0, 0, 0, 0}},
    {11, {0, 0, 2, 6, 0, 0, 0, 0}},
    {13, {0, 0, 0, 4, 0, 0, 0, 0}},
    {17, {0, 0, 0, 4, 0, 0, 0, 0}},
    {19, {0, 0, 2, 6, 0, 0, 0, 0}},
    {23, {0, 0, 2, 6, 0, 0, 0, 0}},
    {29, {0, 0, 0, 4, 0, 0, 0, 0}},
    {31, {0, 0, 2, 6, 0, 0, 0, 0}},
    {37, {0, 0, 0, 4, 0, 0, 0, 0}},
    {41, {0, 0, 0, 4, 0, 0, 0, 0}},
    {43, {0, 0, 2, 6, 0, 0, 0, 0}},
    {47, {0, 0, 2, 6, 0, 0, 0, 0}},
    {53, {0, 0, 0, 4, 0, 0, 0, 0}},
    {59, {0, 0, 2, 6, 0, 0, 0, 0}},
    {61, {0, 0, 0, 4, 0, 0, 0, 0}},
    {67, {0, 0, 2, 6, 0, 0, 0, 0}},
    {71, {0, 0, 2, 6, 0, 0, 0, 0}},
    {73, {0, 0, 0, 4, 0, 0, 0, 0}},
    {79, {0, 0, 2, 6, 0, 0, 0, 0}},
    {83, {0, 0, 2, 6, 0, 0, 0, 0}},
    {89, {0, 0, 0, 4, 0, 0, 0, 0}},
    {97, {0, 0, 0, 4, 0, 0, 0, 0}},
};

}  // namespace

std::span<const WeilTableRow> weil_table_rows() { return kRows; }

}  // namespace tendo::detail
