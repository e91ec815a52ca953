// digitforge: exact digit expansions of algebraic numbers, certificate-word
// construction, repetition/congruence detection, and gcd experiments, all
// on exact arithmetic. Every subcommand is deterministic: the same argv
// produces the same bytes.

#include "digitforge/algebraic.hpp"
#include "digitforge/cache.hpp"
#include "digitforge/constructors.hpp"
#include "digitforge/detectors.hpp"
#include "digitforge/error.hpp"
#include "digitforge/gcdlab.hpp"
#include "digitforge/numberspec.hpp"
#include "digitforge/report.hpp"
#include "digitforge/stream_file.hpp"
#include "digitforge/version.hpp"
#include "digitforge/words.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace digitforge;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

Int parse_int(const std::string& text) {
    Rat r = parse_rational(text);
    if (r.get_den() != 1)
        fail(errc::parse_error, "expected an integer, got '" + text + "'");
    return r.get_num();
}

unsigned long parse_ulong(const std::string& text) {
    Int n = parse_int(text);
    if (sgn(n) < 0 || !n.fits_ulong_p())
        fail(errc::parse_error, "value out of range: '" + text + "'");
    return n.get_ui();
}

// "lo:hi" or a single "k" (meaning k:k), inclusive.
std::pair<unsigned long, unsigned long> parse_range(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        unsigned long k = parse_ulong(text);
        return {k, k};
    }
    unsigned long lo = parse_ulong(text.substr(0, colon));
    unsigned long hi = parse_ulong(text.substr(colon + 1));
    if (lo > hi) fail(errc::parse_error, "empty range '" + text + "'");
    return {lo, hi};
}

// Rows separated by ';', entries by ','.
CoefficientArray parse_coeff_rows(const std::string& text) {
    CoefficientArray C;
    for (const std::string& row : split(text, ';')) {
        C.rows.emplace_back();
        for (const std::string& cell : split(row, ','))
            C.rows.back().push_back(parse_rational(cell));
    }
    return C;
}

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    for (const std::string& cell : split(text, ','))
        out.push_back(parse_int(cell));
    return out;
}

std::vector<size_t> parse_size_list(const std::string& text) {
    std::vector<size_t> out;
    for (const std::string& cell : split(text, ','))
        out.push_back(parse_ulong(cell));
    return out;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
    std::vector<Rat> out;
    for (const std::string& cell : split(text, ','))
        out.push_back(parse_rational(cell));
    return out;
}

// Digit characters for base <= 36, whitespace-separated values above.
DigitWord parse_word_text(const std::string& text, uint32_t base) {
    if (base <= 36) return DigitWord::from_string(text, base);
    std::istringstream in(text);
    std::vector<uint32_t> vals;
    unsigned long v;
    while (in >> v) vals.push_back(uint32_t(v));
    if (!in.eof()) fail(errc::parse_error, "bad digit value in '" + text + "'");
    return DigitWord::from_values(std::move(vals), base);
}

// Words come from stream files (--in, base taken from the file) or literal
// digit text (--word, base from --base); the two forms do not mix.
std::vector<DigitWord> load_words(const std::vector<std::string>& ins,
                                  const std::vector<std::string>& words,
                                  uint32_t base) {
    if (!ins.empty() && !words.empty())
        fail(errc::parse_error, "give --in or --word, not both");
    std::vector<DigitWord> out;
    for (const std::string& path : ins)
        out.push_back(read_stream_file(path).word);
    for (const std::string& text : words)
        out.push_back(parse_word_text(text, base));
    if (out.empty())
        fail(errc::parse_error, "no input word: give --in or --word");
    return out;
}

DigitWord load_one_word(const std::vector<std::string>& ins,
                        const std::vector<std::string>& words, uint32_t base) {
    std::vector<DigitWord> all = load_words(ins, words, base);
    if (all.size() != 1)
        fail(errc::parse_error, "this subcommand takes exactly one word");
    return std::move(all[0]);
}

void write_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
    if (!f) fail(errc::io_error, "cannot open " + out_path);
    f << text;
    f.flush();
    if (!f) fail(errc::io_error, "write failed for " + out_path);
}

void emit(const Report& rep, const std::string& format,
          const std::string& out_path) {
    write_text(format == "json" ? to_json(rep) : to_csv(rep), out_path);
}

std::string rat_text(const Rat& r) { return r.get_str(); }

std::string join_sizes(const std::vector<size_t>& v, char sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

std::string join_blocks(const std::vector<DigitWord>& blocks, char sep) {
    std::string out;
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (i) out += sep;
        out += blocks[i].to_string();
    }
    return out;
}

std::string format_exponents(const ExponentArray& D) {
    std::string out;
    for (size_t i = 0; i < D.rows.size(); ++i) {
        if (i) out += '|';
        for (size_t j = 0; j < D.rows[i].size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(D.rows[i][j]);
        }
    }
    return out;
}

std::vector<std::pair<std::string, std::string>>
base_meta(const std::string& command) {
    return {{"command", command}, {"version", kVersion}};
}

Variant parse_variant(const std::string& name) {
    if (name == "main4") return Variant::main4;
    if (name == "main5") return Variant::main5;
    if (name == "main6") return Variant::main6;
    if (name == "main7") return Variant::main7;
    fail(errc::parse_error, "unknown variant '" + name + "'");
}

NonlinearKind parse_kind(const std::string& name) {
    if (name == "product") return NonlinearKind::product;
    if (name == "square_plus") return NonlinearKind::square_plus;
    if (name == "nested") return NonlinearKind::nested;
    fail(errc::parse_error, "unknown experiment kind '" + name + "'");
}

std::vector<AlgebraicNumber> parse_alphas(const std::vector<std::string>& specs,
                                          const std::string& interval) {
    if (specs.size() > 1 && !interval.empty())
        fail(errc::parse_error,
             "--interval applies to a single --spec; use inline spec@lo,hi");
    std::vector<AlgebraicNumber> out;
    for (const std::string& s : specs)
        out.push_back(
            parse_number_spec(s, specs.size() == 1 ? interval : "").number);
    return out;
}

std::string single_line(std::string text) {
    for (char& c : text)
        if (c == '\n' || c == '\r') c = ' ';
    return text;
}

void add_gcd_sample_cells(std::vector<std::string>& cells,
                          const GcdSample& s) {
    cells.push_back(std::to_string(s.floor_D));
    cells.push_back(to_decimal_string(s.Q));
    cells.push_back(to_decimal_string(s.R));
    cells.push_back(format_ratio(s.ratio));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact digit expansions, certificate words, and gcd "
                 "experiments over algebraic numbers"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    // ---- expand ----
    struct {
        std::string spec, interval, out, cache_dir;
        uint32_t base = 10;
        size_t digits = 0;
        bool normalize = false;
    } ex;
    {
        auto* c = app.add_subcommand(
            "expand", "digit expansion of a rational or algebraic number");
        c->add_option("--spec", ex.spec,
                      "number: \"p/q\" or polynomial \"x^2+2x-1\" (inline "
                      "interval: \"...@lo,hi\")")
            ->required();
        c->add_option("--interval", ex.interval,
                      "root-isolating interval \"lo,hi\"");
        c->add_option("--base", ex.base, "expansion base (default 10)");
        c->add_option("--digits", ex.digits, "number of digits")->required();
        c->add_flag("--normalize", ex.normalize,
                    "shift the value into (0,1) first");
        c->add_option("--out", ex.out, "write a stream file instead of stdout");
        c->add_option("--cache-dir", ex.cache_dir,
                      "digit cache directory (DIGITFORGE_CACHE overrides)");
        c->callback([&] {
            NumberSpec ns =
                parse_number_spec(ex.spec, ex.interval, ex.normalize);
            auto compute = [&](size_t n) {
                return digits(ns.number, ex.base, n);
            };
            DigitWord w;
            if (auto dir = DigitCache::resolve_dir(ex.cache_dir)) {
                DigitCache cache(*dir);
                w = cache.get(ns.canonical, ex.base, ex.digits, compute);
            } else {
                w = compute(ex.digits);
            }
            if (!ex.out.empty()) write_stream_file(ex.out, w, ns.canonical);
            else std::cout << format_digits(w);
        });
    }

    // ---- value ----
    struct {
        std::vector<std::string> ins, words;
        uint32_t base = 10;
        std::string out;
    } va;
    {
        auto* c = app.add_subcommand(
            "value", "integer value of a digit word (last symbol = units)");
        c->add_option("--in", va.ins, "stream file input");
        c->add_option("--word", va.words, "literal digit text");
        c->add_option("--base", va.base, "base for --word (default 10)");
        c->add_option("--out", va.out, "write to file instead of stdout");
        c->callback([&] {
            DigitWord w = load_one_word(va.ins, va.words, va.base);
            write_text(to_decimal_string(value(w)) + "\n", va.out);
        });
    }

    // ---- complexity ----
    struct {
        std::vector<std::string> ins, words;
        uint32_t base = 10;
        std::string n_range, format = "csv", out;
    } cx;
    {
        auto* c = app.add_subcommand(
            "complexity", "distinct length-n factors of a word, per n");
        c->add_option("--in", cx.ins, "stream file input");
        c->add_option("--word", cx.words, "literal digit text");
        c->add_option("--base", cx.base, "base for --word (default 10)");
        c->add_option("--n-range", cx.n_range, "factor lengths \"lo:hi\"")
            ->required();
        c->add_option("--format", cx.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        c->add_option("--out", cx.out, "write to file instead of stdout");
        c->callback([&] {
            DigitWord w = load_one_word(cx.ins, cx.words, cx.base);
            auto [lo, hi] = parse_range(cx.n_range);
            Report rep;
            rep.meta = base_meta("complexity");
            rep.meta.emplace_back("base", std::to_string(w.base()));
            rep.meta.emplace_back("word_len", std::to_string(w.size()));
            rep.meta.emplace_back("n_range", cx.n_range);
            rep.columns = {{"n", Report::Kind::number},
                           {"complexity", Report::Kind::number}};
            for (unsigned long n = lo; n <= hi; ++n)
                rep.add_row({std::to_string(n),
                             std::to_string(complexity(w, size_t(n)))});
            emit(rep, cx.format, cx.out);
        });
    }

    // ---- normality ----
    struct {
        std::vector<std::string> ins, words;
        uint32_t base = 10;
        size_t m = 1, prefix = 0;
        uint64_t shape_cap = 1000000;
        std::string format = "csv", out;
    } no;
    {
        auto* c = app.add_subcommand(
            "normality",
            "window histogram over n x m digit blocks of joint rows");
        c->add_option("--in", no.ins, "stream file inputs (one per row)");
        c->add_option("--word", no.words, "literal digit rows");
        c->add_option("--base", no.base, "base for --word (default 10)");
        c->add_option("--m", no.m, "window width (default 1)");
        c->add_option("--prefix", no.prefix,
                      "number of windows N (default: all available)");
        c->add_option("--shape-cap", no.shape_cap,
                      "refuse histograms larger than this many shapes");
        c->add_option("--format", no.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        c->add_option("--out", no.out, "write to file instead of stdout");
        c->callback([&] {
            std::vector<DigitWord> rows = load_words(no.ins, no.words, no.base);
            size_t N = no.prefix;
            if (N == 0) {
                size_t shortest = rows[0].size();
                for (const DigitWord& w : rows)
                    shortest = std::min(shortest, w.size());
                if (shortest + 1 < no.m)
                    fail(errc::insufficient_digits,
                         "rows shorter than the window width");
                N = shortest - no.m + 1;
            }
            NormalityReport nr =
                normality_report(rows, no.m, N, no.shape_cap);
            Report rep;
            rep.meta = base_meta("normality");
            rep.meta.emplace_back("base", std::to_string(nr.base));
            rep.meta.emplace_back("rows", std::to_string(nr.rows_n));
            rep.meta.emplace_back("cols", std::to_string(nr.cols_m));
            rep.meta.emplace_back("prefix", std::to_string(nr.prefix_len));
            rep.meta.emplace_back("shapes", std::to_string(nr.shapes));
            rep.meta.emplace_back("max_deviation",
                                  rat_text(nr.max_deviation));
            rep.meta.emplace_back("chi_square",
                                  format_ratio(nr.chi_square));
            rep.meta.emplace_back("dof", std::to_string(nr.dof));
            rep.columns = {{"key", Report::Kind::number},
                           {"block", Report::Kind::text},
                           {"count", Report::Kind::number},
                           {"frequency", Report::Kind::text}};
            for (uint64_t key = 0; key < nr.shapes; ++key) {
                std::vector<uint32_t> entries = nr.decode(key);
                std::string block;
                for (size_t r = 0; r < nr.rows_n; ++r) {
                    if (r) block += '/';
                    std::vector<uint32_t> row(
                        entries.begin() + long(r * nr.cols_m),
                        entries.begin() + long((r + 1) * nr.cols_m));
                    block +=
                        DigitWord::from_values(std::move(row), nr.base)
                            .to_string();
                }
                rep.add_row({std::to_string(key), std::move(block),
                             std::to_string(nr.counts[key]),
                             rat_text(nr.frequency(key))});
            }
            emit(rep, no.format, no.out);
        });
    }

    // ---- construct ----
    struct {
        std::string seed, mode, s = "1", out, format = "csv";
        uint32_t base = 10;
        size_t digits = 0;
    } co;
    {
        auto* c = app.add_subcommand(
            "construct",
            "grow a word by congruence-forced blocks; print word and "
            "certificate");
        c->add_option("--seed", co.seed, "starting digit word")->required();
        c->add_option("--base", co.base, "digit base (default 10)");
        c->add_option("--mode", co.mode,
                      "f: append sum block, g: append multiplied block")
            ->required()
            ->check(CLI::IsMember({"f", "g"}));
        c->add_option("--s", co.s, "multiplier for g mode (default 1)");
        c->add_option("--digits", co.digits, "minimum final length")
            ->required();
        c->add_option("--out", co.out,
                      "write the word as a stream file (certificate still on "
                      "stdout)");
        c->add_option("--format", co.format, "certificate format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        c->callback([&] {
            DigitWord seed = parse_word_text(co.seed, co.base);
            BuildSpec spec{co.mode == "f" ? BuildMode::F : BuildMode::G,
                           parse_int(co.s)};
            BuildResult result = generate(seed, spec, co.digits);
            std::vector<CongruenceWitness> witnesses =
                certify(result.steps, result.word, spec);

            if (!co.out.empty()) {
                std::string provenance = "construct:mode=" + co.mode +
                                         ";s=" + co.s + ";seed=" + co.seed +
                                         ";base=" + std::to_string(co.base);
                write_stream_file(co.out, result.word, provenance);
            } else {
                std::cout << format_digits(result.word);
            }

            Report rep;
            rep.meta = base_meta("construct");
            rep.meta.emplace_back("mode", co.mode);
            rep.meta.emplace_back("s", co.s);
            rep.meta.emplace_back("base", std::to_string(co.base));
            rep.meta.emplace_back("word_len",
                                  std::to_string(result.word.size()));
            rep.columns = {{"k", Report::Kind::number},
                           {"prefix_lens", Report::Kind::text},
                           {"blocks", Report::Kind::text}};
            for (const CongruenceWitness& w : witnesses)
                rep.add_row({std::to_string(w.block_len),
                             join_sizes(w.prefix_lens, ';'),
                             join_blocks(w.blocks, ';')});
            std::cout << (co.format == "json" ? to_json(rep) : to_csv(rep));
        });
    }

    // ---- detect-rep ----
    struct {
        std::vector<std::string> ins, words;
        uint32_t base = 10;
        std::string k_range, format = "csv", out;
        bool allow_empty = false;
        uint64_t cap = 100000000;
    } dr;
    {
        auto* c = app.add_subcommand(
            "detect-rep",
            "per block length k, the prefix decomposition A B A' B with "
            "minimal (|A|+|A'|)/k");
        c->add_option("--in", dr.ins, "stream file input");
        c->add_option("--word", dr.words, "literal digit text");
        c->add_option("--base", dr.base, "base for --word (default 10)");
        c->add_option("--k-range", dr.k_range, "block lengths \"lo:hi\"")
            ->required();
        c->add_flag("--allow-empty", dr.allow_empty,
                    "admit empty prefixes A");
        c->add_option("--cap", dr.cap, "candidate budget");
        c->add_option("--format", dr.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        c->add_option("--out", dr.out, "write to file instead of stdout");
        c->callback([&] {
            DigitWord w = load_one_word(dr.ins, dr.words, dr.base);
            auto [lo, hi] = parse_range(dr.k_range);
            SearchOptions opts;
            opts.allow_empty_prefix = dr.allow_empty;
            opts.candidate_cap = dr.cap;
            auto profile = repetition_profile(w, lo, hi, opts);
            Report rep;
            rep.meta = base_meta("detect-rep");
            rep.meta.emplace_back("base", std::to_string(w.base()));
            rep.meta.emplace_back("word_len", std::to_string(w.size()));
            rep.meta.emplace_back("k_range", dr.k_range);
            rep.columns = {{"k", Report::Kind::number},
                           {"a_len", Report::Kind::number},
                           {"a2_len", Report::Kind::number},
                           {"ratio", Report::Kind::number}};
            for (const auto& [k, witness] : profile) {
                if (!witness) continue;
                rep.add_row({std::to_string(k),
                             std::to_string(witness->a_len),
                             std::to_string(witness->a2_len),
                             format_ratio(witness->ratio.get_d())});
            }
            emit(rep, dr.format, dr.out);
        });
    }

    // ---- detect-common ----
    struct {
        std::vector<std::string> ins, words;
        uint32_t base = 10;
        std::string k_range, format = "csv", out;
        bool allow_empty = false;
        uint64_t cap = 100000000;
    } dc;
    {
        auto* c = app.add_subcommand(
            "detect-common",
            "per k, a shared length-k block of two words with minimal "
            "(|A|+|A'|)/k");
        c->add_option("--in", dc.ins, "two stream file inputs");
        c->add_option("--word", dc.words, "two literal digit texts");
        c->add_option("--base", dc.base, "base for --word (default 10)");
        c->add_option("--k-range", dc.k_range, "block lengths \"lo:hi\"")
            ->required();
        c->add_flag("--allow-empty", dc.allow_empty,
                    "admit empty prefixes");
        c->add_option("--cap", dc.cap, "candidate budget");
        c->add_option("--format", dc.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        c->add_option("--out", dc.out, "write to file instead of stdout");
        c->callback([&] {
            std::vector<DigitWord> words =
                load_words(dc.ins, dc.words, dc.base);
            if (words.size() != 2)
                fail(errc::parse_error,
                     "detect-common takes exactly two words");
            auto [lo, hi] = parse_range(dc.k_range);
            SearchOptions opts;
            opts.allow_empty_prefix = dc.allow_empty;
            opts.candidate_cap = dc.cap;
            auto profile =
                common_block_profile(words[0], words[1], lo, hi, opts);
            Report rep;
            rep.meta = base_meta("detect-common");
            rep.meta.emplace_back("base", std::to_string(words[0].base()));
            rep.meta.emplace_back("k_range", dc.k_range);
            rep.columns = {{"k", Report::Kind::number},
                           {"a_len", Report::Kind::number},
                           {"a2_len", Report::Kind::number},
                           {"ratio", Report::Kind::number}};
            for (const auto& [k, witness] : profile) {
                if (!witness) continue;
                rep.add_row({std::to_string(k),
                             std::to_string(witness->a_len),
                             std::to_string(witness->a2_len),
                             format_ratio(witness->ratio.get_d())});
            }
            emit(rep, dc.format, dc.out);
        });
    }

    // ---- detect-cong ----
    struct {
        std::vector<std::string> ins, words;
        uint32_t base = 10;
        std::string coeffs, assign, format = "csv", out;
        size_t k = 0, max_prefix = 0;
        bool allow_empty = false;
        uint64_t cap = 100000000;
    } dg;
    {
        auto* c = app.add_subcommand(
            "detect-cong",
            "blocks B^1..B^m of length k with sum a_j value(B^j) == 0 mod "
            "b^k");
        c->add_option("--in", dg.ins, "stream file inputs");
        c->add_option("--word", dg.words, "literal digit texts");
        c->add_option("--base", dg.base, "base for --word (default 10)");
        c->add_option("--coeffs", dg.coeffs,
                      "nonzero integer coefficients \"a1,a2,...\"")
            ->required();
        c->add_option("--assign", dg.assign,
                      "word index per block (default: all 0)");
        c->add_option("--k", dg.k, "block length")->required();
        c->add_option("--max-prefix", dg.max_prefix,
                      "largest prefix length |A^j| (default: longest valid)");
        c->add_flag("--allow-empty", dg.allow_empty,
                    "admit empty prefixes");
        c->add_option("--cap", dg.cap, "candidate budget");
        c->add_option("--format", dg.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        c->add_option("--out", dg.out, "write to file instead of stdout");
        c->callback([&] {
            std::vector<DigitWord> words =
                load_words(dg.ins, dg.words, dg.base);
            CongruenceSpec spec;
            spec.coefficients = parse_int_list(dg.coeffs);
            spec.word_assignment =
                dg.assign.empty()
                    ? std::vector<size_t>(spec.coefficients.size(), 0)
                    : parse_size_list(dg.assign);
            size_t max_prefix = dg.max_prefix;
            if (max_prefix == 0) {
                size_t shortest = words[0].size();
                for (const DigitWord& w : words)
                    shortest = std::min(shortest, w.size());
                if (shortest < dg.k)
                    fail(errc::range_error, "words shorter than the block");
                max_prefix = shortest - dg.k;
            }
            SearchOptions opts;
            opts.allow_empty_prefix = dg.allow_empty;
            opts.candidate_cap = dg.cap;
            auto witnesses =
                congruence_search(words, spec, dg.k, max_prefix, opts);
            Report rep;
            rep.meta = base_meta("detect-cong");
            rep.meta.emplace_back("base", std::to_string(words[0].base()));
            rep.meta.emplace_back("coeffs", dg.coeffs);
            rep.meta.emplace_back("k", std::to_string(dg.k));
            rep.meta.emplace_back("max_prefix", std::to_string(max_prefix));
            rep.columns = {{"k", Report::Kind::number},
                           {"prefix_lens", Report::Kind::text},
                           {"blocks", Report::Kind::text}};
            for (const CongruenceWitness& w : witnesses)
                rep.add_row({std::to_string(w.block_len),
                             join_sizes(w.prefix_lens, ';'),
                             join_blocks(w.blocks, ';')});
            emit(rep, dg.format, dg.out);
        });
    }

    // ---- scan ----
    struct {
        std::vector<std::string> specs;
        std::string interval, coeffs, variant = "main6";
        uint32_t base = 10;
        std::string L = "3", floor_range = "50:400", perturb;
        double epsilon = 0.1;
        long gap_min = 20;
        size_t budget = 100000;
        std::string format = "csv", out;
    } sc;
    {
        auto* c = app.add_subcommand(
            "scan",
            "sweep exponent arrays and report gcd ratios of floor sums");
        c->add_option("--spec", sc.specs,
                      "number spec per row (inline interval for several)")
            ->required();
        c->add_option("--interval", sc.interval,
                      "interval for a single --spec");
        c->add_option("--coeffs", sc.coeffs,
                      "coefficient rows \"c11,c12;c21\"")
            ->required();
        c->add_option("--variant", sc.variant,
                      "main4|main5|main6|main7 (default main6)")
            ->check(CLI::IsMember({"main4", "main5", "main6", "main7"}));
        c->add_option("--base", sc.base, "base (default 10)");
        c->add_option("--L", sc.L, "admissibility bound max <= L*min");
        c->add_option("--epsilon", sc.epsilon,
                      "violation threshold on the ratio (default 0.1)");
        c->add_option("--floor-range", sc.floor_range,
                      "smallest-exponent sweep \"lo:hi\" (default 50:400)");
        c->add_option("--gap-min", sc.gap_min,
                      "lattice gap; g runs over gap*{1,2,4} (default 20)");
        c->add_option("--budget", sc.budget, "maximum sample count");
        c->add_option("--perturb", sc.perturb,
                      "rational perturbations \"p1,p2,...\" cycled by index "
                      "(main4/main5)");
        c->add_option("--format", sc.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        c->add_option("--out", sc.out, "write to file instead of stdout");
        c->callback([&] {
            std::vector<AlgebraicNumber> alphas =
                parse_alphas(sc.specs, sc.interval);
            CoefficientArray C = parse_coeff_rows(sc.coeffs);
            ScanConfig cfg;
            cfg.L = parse_rational(sc.L);
            cfg.epsilon = sc.epsilon;
            auto [flo, fhi] = parse_range(sc.floor_range);
            cfg.floor_range = {long(flo), long(fhi)};
            cfg.gap_min = sc.gap_min;
            cfg.sample_budget = sc.budget;
            if (!sc.perturb.empty())
                cfg.perturbation = parse_rat_list(sc.perturb);
            ScanReport sr =
                scan(alphas, C, sc.base, parse_variant(sc.variant), cfg);
            Report rep;
            rep.meta = base_meta("scan");
            rep.meta.emplace_back("variant", sc.variant);
            rep.meta.emplace_back("base", std::to_string(sc.base));
            rep.meta.emplace_back("epsilon", format_ratio(sc.epsilon));
            rep.meta.emplace_back("samples",
                                  std::to_string(sr.rows.size()));
            rep.meta.emplace_back("violations",
                                  std::to_string(sr.violation_count));
            rep.meta.emplace_back("max_ratio", format_ratio(sr.max_ratio));
            rep.columns = {{"index", Report::Kind::number},
                           {"array", Report::Kind::text},
                           {"floor_D", Report::Kind::number},
                           {"Q", Report::Kind::text},
                           {"R", Report::Kind::text},
                           {"ratio", Report::Kind::number},
                           {"violation", Report::Kind::text}};
            for (const ScanRow& row : sr.rows) {
                std::vector<std::string> cells{std::to_string(row.index),
                                               format_exponents(row.D)};
                add_gcd_sample_cells(cells, row.sample);
                cells.push_back(row.violation ? "true" : "false");
                rep.add_row(std::move(cells));
            }
            emit(rep, sc.format, sc.out);
        });
    }

    // ---- poly-gcd ----
    struct {
        std::string coeffs, n_range, format = "csv", out;
        uint32_t base = 10;
    } pg;
    {
        auto* c = app.add_subcommand(
            "poly-gcd",
            "gcd of [f(b^n)] with b^n for f with exact real coefficients");
        c->add_option("--coeffs", pg.coeffs,
                      "coefficients a0;a1;... as number specs "
                      "(e.g. \"0;x^2-2@1,2\")")
            ->required();
        c->add_option("--base", pg.base, "base (default 10)");
        c->add_option("--n-range", pg.n_range, "exponents \"lo:hi\"")
            ->required();
        c->add_option("--format", pg.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        c->add_option("--out", pg.out, "write to file instead of stdout");
        c->callback([&] {
            std::vector<AlgebraicNumber> coeffs;
            for (const std::string& piece : split(pg.coeffs, ';'))
                coeffs.push_back(parse_number_spec(piece).number);
            auto [lo, hi] = parse_range(pg.n_range);
            Report rep;
            rep.meta = base_meta("poly-gcd");
            rep.meta.emplace_back("base", std::to_string(pg.base));
            rep.meta.emplace_back("n_range", pg.n_range);
            rep.columns = {{"n", Report::Kind::number},
                           {"floor_D", Report::Kind::number},
                           {"Q", Report::Kind::text},
                           {"R", Report::Kind::text},
                           {"ratio", Report::Kind::number}};
            for (unsigned long n = lo; n <= hi; ++n) {
                GcdSample s = poly_floor_gcd(coeffs, pg.base, n);
                std::vector<std::string> cells{std::to_string(n)};
                add_gcd_sample_cells(cells, s);
                rep.add_row(std::move(cells));
            }
            emit(rep, pg.format, pg.out);
        });
    }

    // ---- poly-pair-gcd ----
    struct {
        std::string f, g, n_range, format = "csv", out;
        uint32_t base = 10;
    } pp;
    {
        auto* c = app.add_subcommand(
            "poly-pair-gcd", "full gcd of [f(b^n)] and [g(b^n)] per n");
        c->add_option("--f", pp.f, "coefficients of f: \"a0;a1;...\"")
            ->required();
        c->add_option("--g", pp.g, "coefficients of g: \"a0;a1;...\"")
            ->required();
        c->add_option("--base", pp.base, "base (default 10)");
        c->add_option("--n-range", pp.n_range, "exponents \"lo:hi\"")
            ->required();
        c->add_option("--format", pp.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        c->add_option("--out", pp.out, "write to file instead of stdout");
        c->callback([&] {
            std::vector<AlgebraicNumber> f, g;
            for (const std::string& piece : split(pp.f, ';'))
                f.push_back(parse_number_spec(piece).number);
            for (const std::string& piece : split(pp.g, ';'))
                g.push_back(parse_number_spec(piece).number);
            auto [lo, hi] = parse_range(pp.n_range);
            Report rep;
            rep.meta = base_meta("poly-pair-gcd");
            rep.meta.emplace_back("base", std::to_string(pp.base));
            rep.meta.emplace_back("n_range", pp.n_range);
            rep.columns = {{"n", Report::Kind::number},
                           {"q_f", Report::Kind::text},
                           {"q_g", Report::Kind::text},
                           {"gcd", Report::Kind::text},
                           {"ratio", Report::Kind::number}};
            for (unsigned long n = lo; n <= hi; ++n) {
                PolyPairSample s = poly_pair_gcd(f, g, pp.base, n);
                rep.add_row({std::to_string(n), to_decimal_string(s.q_f),
                             to_decimal_string(s.q_g),
                             to_decimal_string(s.gcd),
                             format_ratio(s.ratio)});
            }
            emit(rep, pp.format, pp.out);
        });
    }

    // ---- conj ----
    struct {
        std::string kind, alpha, beta, format = "csv", out;
        unsigned long k = 1, m = 0;
        uint32_t base = 10;
    } cj;
    {
        auto* c = app.add_subcommand(
            "conj", "nonlinear floor experiments against the modulus b^m");
        c->add_option("--kind", cj.kind, "product|square_plus|nested")
            ->required()
            ->check(CLI::IsMember({"product", "square_plus", "nested"}));
        c->add_option("--alpha", cj.alpha, "first number spec")->required();
        c->add_option("--beta", cj.beta,
                      "second number spec (default: same as --alpha)");
        c->add_option("--k", cj.k, "extra exponent offset (default 1)");
        c->add_option("--m", cj.m, "modulus exponent")->required();
        c->add_option("--base", cj.base, "base (default 10)");
        c->add_option("--format", cj.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        c->add_option("--out", cj.out, "write to file instead of stdout");
        c->callback([&] {
            AlgebraicNumber alpha = parse_number_spec(cj.alpha).number;
            AlgebraicNumber beta =
                cj.beta.empty() ? alpha : parse_number_spec(cj.beta).number;
            GcdSample s = nonlinear_experiment(parse_kind(cj.kind), alpha,
                                               beta, cj.k, cj.m, cj.base);
            Report rep;
            rep.meta = base_meta("conj");
            rep.meta.emplace_back("kind", cj.kind);
            rep.meta.emplace_back("k", std::to_string(cj.k));
            rep.meta.emplace_back("m", std::to_string(cj.m));
            rep.meta.emplace_back("base", std::to_string(cj.base));
            rep.columns = {{"floor_D", Report::Kind::number},
                           {"Q", Report::Kind::text},
                           {"R", Report::Kind::text},
                           {"ratio", Report::Kind::number}};
            std::vector<std::string> cells;
            add_gcd_sample_cells(cells, s);
            rep.add_row(std::move(cells));
            emit(rep, cj.format, cj.out);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // help / version
        std::cerr << "digitforge: ParseError: " << single_line(e.what())
                  << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "digitforge: " << e.name() << ": "
                  << single_line(e.what()) << '\n';
        return is_budget_error(e.code()) ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "digitforge: InternalError: " << single_line(e.what())
                  << '\n';
        return 1;
    }
    return 0;
}
