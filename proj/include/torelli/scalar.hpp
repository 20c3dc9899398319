#pragma once

#include <gmpxx.h>

#include <string>

namespace torelli {

/// Exact rational scalar. Always kept in lowest terms.
using Scalar = mpq_class;
using BigInt = mpz_class;

std::string to_string(const Scalar& value);

/// True when the value has denominator one.
bool is_integer(const Scalar& value);

}  // namespace torelli
