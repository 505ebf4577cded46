#pragma once

#include <stdexcept>
#include <string>

namespace demchar {

/// Bad caller input: unknown type, out-of-range index, weight that fails a
/// precondition. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument
{
public:
	using std::invalid_argument::invalid_argument;
};

/// A configured size bound (rank, group order) was exceeded.
class LimitError : public InputError
{
public:
	using InputError::InputError;
};

/// An internal invariant failed. Seeing one of these means a bug or a false
/// mathematical claim, never bad input.
class ConsistencyError : public std::logic_error
{
public:
	using std::logic_error::logic_error;
};

} // namespace demchar
