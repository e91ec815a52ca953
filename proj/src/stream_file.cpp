#include "digitforge/stream_file.hpp"

#include "digitforge/error.hpp"

#include <fstream>
#include <sstream>

namespace digitforge {

namespace {

constexpr size_t kWrap = 120;

uint32_t digit_of_char(char ch, uint32_t base) {
    uint32_t d;
    if (ch >= '0' && ch <= '9') d = uint32_t(ch - '0');
    else if (ch >= 'a' && ch <= 'z') d = uint32_t(ch - 'a') + 10;
    else
        fail(errc::parse_error,
             std::string("bad digit character '") + ch + "' in stream body");
    if (d >= base)
        fail(errc::parse_error, "digit out of range for base in stream body");
    return d;
}

} // namespace

std::string format_digits(const DigitWord& w) {
    std::string out;
    if (w.empty()) return out;
    if (w.base() <= 36) {
        std::string text = w.to_string();
        for (size_t i = 0; i < text.size(); i += kWrap) {
            out.append(text, i, std::min(kWrap, text.size() - i));
            out += '\n';
        }
    } else {
        size_t line = 0;
        for (size_t i = 0; i < w.size(); ++i) {
            std::string v = std::to_string(w[i]);
            if (line > 0 && line + 1 + v.size() > kWrap) {
                out += '\n';
                line = 0;
            }
            if (line > 0) {
                out += ' ';
                ++line;
            }
            out += v;
            line += v.size();
        }
        out += '\n';
    }
    return out;
}

void write_stream_file(const std::filesystem::path& path, const DigitWord& w,
                       const std::string& spec) {
    if (spec.find('\n') != std::string::npos)
        fail(errc::parse_error, "spec text must not contain newlines");
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) fail(errc::io_error, "cannot open " + path.string());
    f << "digitstream 1 base=" << w.base() << " count=" << w.size()
      << " spec=" << spec << '\n';
    f << format_digits(w);
    f.flush();
    if (!f) fail(errc::io_error, "write failed for " + path.string());
}

StreamFile read_stream_file(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(errc::io_error, "cannot open " + path.string());
    std::string header;
    if (!std::getline(f, header))
        fail(errc::parse_error, "missing stream header in " + path.string());

    std::istringstream hs(header);
    std::string magic, version, base_kv, count_kv;
    hs >> magic >> version >> base_kv >> count_kv;
    if (magic != "digitstream" || version != "1" ||
        base_kv.rfind("base=", 0) != 0 || count_kv.rfind("count=", 0) != 0)
        fail(errc::parse_error, "bad stream header in " + path.string());
    unsigned long base_v = 0, count_v = 0;
    try {
        base_v = std::stoul(base_kv.substr(5));
        count_v = std::stoul(count_kv.substr(6));
    } catch (const std::exception&) {
        fail(errc::parse_error, "bad stream header in " + path.string());
    }

    StreamFile out;
    auto spec_pos = header.find(" spec=");
    if (spec_pos == std::string::npos)
        fail(errc::parse_error, "stream header lacks spec in " + path.string());
    out.spec = header.substr(spec_pos + 6);

    DigitWord w((uint32_t)base_v);
    if (base_v <= 36) {
        char ch;
        while (f.get(ch)) {
            if (ch == '\n' || ch == '\r' || ch == ' ' || ch == '\t') continue;
            w.push_back(digit_of_char(ch, (uint32_t)base_v));
        }
    } else {
        unsigned long v;
        while (f >> v) {
            if (v >= base_v)
                fail(errc::parse_error,
                     "digit out of range for base in stream body");
            w.push_back((uint32_t)v);
        }
    }
    if (w.size() != count_v)
        fail(errc::parse_error,
             "stream body length disagrees with its header count");
    out.word = std::move(w);
    return out;
}

} // namespace digitforge
