#pragma once

#include "digitforge/words.hpp"

#include <filesystem>
#include <string>

namespace digitforge {

// On-disk digit stream. Line 1 is the header:
//   digitstream 1 base=<b> count=<n> spec=<rest of line>
// The body holds the digits: for base <= 36 as contiguous digit
// characters (0-9 then a-z) with a newline every 120 characters, for
// larger bases as whitespace-separated decimal values. Newlines and
// spaces in the body carry no information; read(write(w)) == w exactly.
struct StreamFile {
    DigitWord word;
    std::string spec; // free-form provenance text, no newlines
};

void write_stream_file(const std::filesystem::path& path, const DigitWord& w,
                       const std::string& spec);

StreamFile read_stream_file(const std::filesystem::path& path);

// The body serialization alone (exactly what write_stream_file puts after
// the header); the CLI prints this form on stdout.
std::string format_digits(const DigitWord& w);

} // namespace digitforge
