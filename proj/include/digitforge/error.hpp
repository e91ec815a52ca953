#pragma once

#include <stdexcept>
#include <string>

namespace digitforge {

// Every failure mode the library reports. The CLI prints the camel-case
// name of the code as part of its one-line diagnostic.
enum class errc {
    not_square_free,
    root_count_not_one,
    endpoint_is_root,
    rational_root,
    refinement_budget_exceeded,
    domain_error,
    empty_word,
    block_too_long,
    insufficient_digits,
    shape_budget_exceeded,
    word_too_short,
    zero_multiplier,
    ledger_mismatch,
    base_mismatch,
    range_error,
    budget_exceeded,
    index_out_of_range,
    empty_array,
    shape_mismatch,
    parse_error,
    io_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const { return code_; }
    const char* name() const { return errc_name(code_); }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw Error(code, what);
}

// True for errors that signal an exhausted computation budget rather than
// bad input; the CLI maps these to exit code 2.
inline bool is_budget_error(errc code) {
    return code == errc::refinement_budget_exceeded ||
           code == errc::budget_exceeded ||
           code == errc::shape_budget_exceeded;
}

} // namespace digitforge
