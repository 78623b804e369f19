// Copyright 2026 The rfan Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rfan {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Rational dot(std::span<const Integer> a, std::span<const Rational> b);
Integer dot(std::span<const Integer> a, std::span<const Integer> b);

/// Smallest positive multiple of v with integer entries (entries coprime).
/// The zero vector maps to itself.
IntVector primitive(std::span<const Rational> v);
IntVector primitive(std::span<const Integer> v);

RatVector to_rational(std::span<const Integer> v);

bool is_zero(std::span<const Integer> v);
bool is_zero(std::span<const Rational> v);

/// True iff a = t*b for some t > 0. Both must be nonzero.
bool positively_parallel(std::span<const Integer> a, std::span<const Integer> b);

IntVector negated(std::span<const Integer> v);

}  // namespace rfan
