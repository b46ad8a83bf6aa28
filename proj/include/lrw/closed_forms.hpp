#pragma once

#include "lrw/classical.hpp"

namespace lrw {

/// W(m * omega_ell) for the rectangle <m^ell>. For O the components are all
/// ways of shortening columns of height ell by vertical dominoes; for Sp they
/// are the complements inside the rectangle of partitions with even rows.
/// Every component has multiplicity one.
WDecomposition closed_form_rectangle(int m, int ell, Family family);

/// W_O(a omega_1 + b omega_2 + c omega_3): one component at
/// lambda - r omega_2 - s (omega_3 - omega_2 + omega_1) - t (omega_3 - omega_1)
/// for each s <= a, r <= b, s + t <= c.
WDecomposition closed_form_abc(int a, int b, int c);

/// W_O(a omega_2 + b omega_4): mu = sum c_i omega_i inside the top with
/// c_1 = c_3 <= a, multiplicity 1 + min(c_2, a - c_3, b - c_3 - c_4,
/// a + b - c_1 - c_2 - c_3 - c_4) whenever that is positive.
WDecomposition closed_form_24(int a, int b);

/// The partitions of a omega_1 + b omega_2 + c omega_3 and a omega_2 + b omega_4.
Partition abc_partition(int a, int b, int c);
Partition partition_24(int a, int b);

}  // namespace lrw
