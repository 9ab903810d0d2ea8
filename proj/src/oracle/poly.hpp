// Copyright 2026 The Carmichael Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense polynomial arithmetic over Z/NZ, optionally modulo a monic polynomial.

#pragma once

#include <gmpxx.h>

#include "carmichael/oracle.hpp"

namespace carmichael::detail {

void trim(Poly& a);
std::size_t degree(const Poly& a);  // of a trimmed nonzero polynomial; 0 for zero
bool is_zero(const Poly& a);

Poly add(const Poly& a, const Poly& b, const Nat& N);
Poly sub(const Poly& a, const Poly& b, const Nat& N);
/// a mod f over Z/NZ; f monic.
Poly reduce(Poly a, const Poly& f, const Nat& N);
Poly mul_mod(const Poly& a, const Poly& b, const Poly& f, const Nat& N);
Poly pow_mod(const Poly& a, const Nat& e, const Poly& f, const Nat& N);
/// Monic gcd over the field F_p.
Poly gcd_field(Poly a, Poly b, const Nat& p);

/// Pads to exactly d coefficients (elements of a ring with deg f = d).
Poly pad(Poly a, std::size_t d);
Poly random_element(gmp_randclass& rng, const Nat& N, std::size_t d);

/// True iff (x + y)^n != x^n + y^n in (Z/NZ)[t]/(f).
bool refutes(const Poly& x, const Poly& y, const Nat& n, const Poly& f, const Nat& N);

std::string poly_to_string(const Poly& f);

}  // namespace carmichael::detail
