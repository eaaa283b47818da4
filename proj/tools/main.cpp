// orbitforce: decide and enumerate the forcing relation among
// eventually-fixed orbit patterns of interval maps.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <orbitforce/language.hpp>
#include <orbitforce/poset.hpp>
#include <orbitforce/realization.hpp>
#include <orbitforce/rewrite.hpp>

namespace {

constexpr std::size_t kMaxLenCap = 14;  // guards against runaway enumerations

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;

using namespace orbitforce;

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open \"" << out_path << "\" for writing\n";
    return kExitUsage;
  }
  out << text;
  return kExitOk;
}

PatternSet forced_set(const Word& w, Method method) {
  switch (method) {
    case Method::derive:    return derivable_set(w);
    case Method::construct: return construct_language(w);
    case Method::realize:   return forced_set_via_realization(w);
  }
  return {};
}

std::string words_as_json(const PatternSet& s) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Word& w : s) arr.push_back(format_word(w));
  return arr.dump();
}

std::string band_interval(const TagBand& b) {
  if (b.lo == b.hi) return "{" + rational_to_string(b.lo) + "}";
  std::string s;
  s += b.lo_closed ? '[' : '(';
  s += rational_to_string(b.lo);
  s += ", ";
  s += rational_to_string(b.hi);
  s += b.hi_closed ? ']' : ')';
  return s;
}

int run_derive(const std::string& w_text, const std::string& u_text,
               const std::string& out_path) {
  Word w = parse_word(w_text);
  Word u = parse_word(u_text);
  auto witness = find_derivation(w, u);
  std::ostringstream os;
  if (!witness) {
    os << "no\n";
    int rc = emit(os.str(), out_path);
    return rc == kExitOk ? kExitNo : rc;
  }
  os << "yes\n";
  for (const auto& step : witness->reductions) {
    os << "  rule " << rule_name(step.rule.kind) << " at position "
       << step.rule.position << "\n";
  }
  if (witness->has_tail_step()) {
    os << "  tail: " << witness->target << "\n";
  }
  return emit(os.str(), out_path);
}

int run_forced(const std::string& w_text, Method method,
               const std::string& format, const std::string& out_path) {
  Word w = parse_word(w_text);
  PatternSet s = forced_set(w, method);
  std::ostringstream os;
  if (format == "json") {
    os << words_as_json(s) << "\n";
  } else {
    for (const Word& u : s) os << u << "\n";
  }
  return emit(os.str(), out_path);
}

int run_realize(const std::string& w_text, const std::string& format,
                const std::string& out_path) {
  Word w = parse_word(w_text);
  CanonicalOrbit orbit = canonical_orbit(w);
  PLMap map = interpolate(orbit);
  if (format == "json") {
    return emit(export_plmap_json(map) + "\n", out_path);
  }
  std::ostringstream os;
  os << "word: " << w << "\n";
  os << "orbit:";
  for (const Rational& x : orbit.points) os << " " << rational_to_string(x);
  os << "\n";
  os << "domain: [" << rational_to_string(map.domain_min()) << ", "
     << rational_to_string(map.domain_max()) << "]\n";
  os << "breakpoints:\n";
  for (const Breakpoint& bp : map.breakpoints()) {
    os << "  " << rational_to_string(bp.x) << " -> " << rational_to_string(bp.y)
       << "\n";
  }
  TagEnumeration tags = enumerate_tags(map, w.size());
  os << "bands:\n";
  for (const TagBand& b : tag_bands(map, tags)) {
    os << "  " << band_interval(b) << "  " << b.tag << "\n";
  }
  return emit(os.str(), out_path);
}

int run_hasse(std::size_t max_len, Method method, const std::string& format,
              const std::string& out_path) {
  ForcingGraph reduced = hasse(forcing_graph(max_len, method));
  if (format == "dot") return emit(export_dot(reduced), out_path);
  if (format == "json") return emit(export_json(reduced) + "\n", out_path);
  std::ostringstream os;
  for (const Word& w : reduced.nodes) os << w << "\n";
  for (const Word& w : reduced.nodes) {
    for (const Word& u : reduced.successors(w)) {
      os << w << " -> " << u << "\n";
    }
  }
  return emit(os.str(), out_path);
}

std::string set_difference_text(const PatternSet& a, const PatternSet& b) {
  std::ostringstream os;
  os << "{";
  bool sep = false;
  for (const Word& w : a) {
    if (!b.contains(w)) {
      if (sep) os << ", ";
      os << w;
      sep = true;
    }
  }
  os << "}";
  return os.str();
}

int run_verify(std::size_t max_len, const std::string& out_path) {
  const std::size_t realize_len = std::min<std::size_t>(max_len, 8);
  LanguageTable table;
  std::ostringstream os;
  std::size_t symbolic = 0, realized = 0;
  bool ok = true;

  for (const Word& w : words_up_to_length(max_len)) {
    PatternSet derived = derivable_set(w);
    const PatternSet& constructed = table.language(w);
    ++symbolic;
    if (derived != constructed) {
      ok = false;
      os << "MISMATCH " << w
         << ": only-derive=" << set_difference_text(derived, constructed)
         << " only-construct=" << set_difference_text(constructed, derived)
         << "\n";
    }
    if (w.size() <= realize_len) {
      PatternSet real = forced_set_via_realization(w);
      ++realized;
      if (real != derived) {
        ok = false;
        os << "MISMATCH " << w
           << ": only-realize=" << set_difference_text(real, derived)
           << " only-derive=" << set_difference_text(derived, real) << "\n";
      }
    }
  }

  os << "derive/construct agreement up to length " << max_len << ": "
     << symbolic << " words checked\n";
  os << "realization agreement up to length " << realize_len << ": "
     << realized << " words checked\n";
  os << (ok ? "OK: all characterizations agree\n"
            : "FAIL: characterizations disagree\n");
  int rc = emit(os.str(), out_path);
  if (rc != kExitOk) return rc;
  return ok ? kExitOk : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "forcing relation among eventually-fixed orbit patterns of interval "
      "maps"};
  app.require_subcommand(1);

  std::string word_a, word_b, out_path;
  std::string method_text = "derive";
  std::string format_text = "text";
  std::size_t max_len = 4;

  auto* derive_cmd = app.add_subcommand(
      "derive", "decide whether the second word is forced by the first and "
                "print a witness derivation");
  derive_cmd->add_option("word", word_a, "source word (L/R letters, e = empty)")
      ->required();
  derive_cmd->add_option("target", word_b, "word to derive")->required();
  derive_cmd->add_option("--out", out_path, "write output to a file");

  auto* forced_cmd =
      app.add_subcommand("forced", "print the full forced set of a word");
  forced_cmd->add_option("word", word_a, "source word")->required();
  forced_cmd
      ->add_option("--method", method_text,
                   "characterization: derive|construct|realize")
      ->check(CLI::IsMember({"derive", "construct", "realize"}));
  forced_cmd->add_option("--format", format_text, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  forced_cmd->add_option("--out", out_path, "write output to a file");

  auto* realize_cmd = app.add_subcommand(
      "realize", "print the canonical piecewise-linear map of a word and its "
                 "tag bands");
  realize_cmd->add_option("word", word_a, "word to realize")->required();
  realize_cmd->add_option("--format", format_text, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  realize_cmd->add_option("--out", out_path, "write output to a file");

  auto* hasse_cmd = app.add_subcommand(
      "hasse", "emit the Hasse diagram of the forcing order up to a length");
  hasse_cmd->add_option("--max-len", max_len, "maximum word length")
      ->check(CLI::Range(std::size_t{0}, kMaxLenCap));
  hasse_cmd
      ->add_option("--method", method_text,
                   "characterization: derive|construct|realize")
      ->check(CLI::IsMember({"derive", "construct", "realize"}));
  hasse_cmd->add_option("--format", format_text, "text|json|dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  hasse_cmd->add_option("--out", out_path, "write output to a file");

  auto* verify_cmd = app.add_subcommand(
      "verify", "cross-check all three characterizations on every word up to "
                "a length");
  verify_cmd->add_option("--max-len", max_len, "maximum word length")
      ->check(CLI::Range(std::size_t{0}, kMaxLenCap));
  verify_cmd->add_option("--out", out_path, "write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Method method = *method_from_name(method_text);
  try {
    if (derive_cmd->parsed()) return run_derive(word_a, word_b, out_path);
    if (forced_cmd->parsed())
      return run_forced(word_a, method, format_text, out_path);
    if (realize_cmd->parsed())
      return run_realize(word_a, format_text, out_path);
    if (hasse_cmd->parsed())
      return run_hasse(max_len, method, format_text, out_path);
    if (verify_cmd->parsed()) return run_verify(max_len, out_path);
  } catch (const InvalidLetter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitNo;
  }
  return kExitUsage;
}
