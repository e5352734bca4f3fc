// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "matroid/coalgebra.hpp"
#include "matroid/errors.hpp"
#include "matroid/f_invariant.hpp"
#include "matroid/freedom.hpp"
#include "matroid/g_invariant.hpp"
#include "matroid/io.hpp"
#include "matroid/nbc.hpp"
#include "matroid/orlik_solomon.hpp"
#include "matroid/tutte.hpp"

namespace matroid::cli {

namespace {

using nlohmann::json;

struct Output {
  std::string text;
  json data;
};

std::vector<int> labels_of(ElementSet s) { return s.labels(); }

template <std::size_t N, class Coeff>
json polynomial_json(const Polynomial<N, Coeff>& p, const std::array<std::string_view, N>& names) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({{"exponent", std::vector<int>(e.begin(), e.end())}, {"coefficient", to_string(c)}});
  return {{"text", p.to_string(names)}, {"terms", terms}};
}

template <class Coeff>
json symbols_json(const SymbolCombination<Coeff>& g) {
  json terms = json::array();
  for (auto it = g.coefficients.rbegin(); it != g.coefficients.rend(); ++it)
    terms.push_back({{"sequence", it->first.to_string()}, {"coefficient", to_string(it->second)}});
  return {{"n", g.n}, {"r", g.r}, {"text", g.to_string()}, {"terms", terms}};
}

json exterior_json(const ExteriorElement& a) {
  json terms = json::array();
  for (const auto& [s, c] : a.terms())
    terms.push_back({{"monomial", labels_of(s)}, {"coefficient", to_string(c)}});
  return {{"text", a.to_string()}, {"terms", terms}};
}

std::string join_sets(const std::vector<ElementSet>& sets) {
  std::string out;
  for (ElementSet s : sets) out += (out.empty() ? "" : " ") + s.to_string();
  return out;
}

std::string read_stream(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

MatroidDocument load(const std::string& path) {
  if (path == "-") return parse_document(read_stream(std::cin));
  return load_document(path);
}

/// Non-trivial copoints when m is paving, nullopt otherwise.
std::optional<std::vector<ElementSet>> paving_copoints(const Matroid& m) {
  const int r = m.rank();
  if (r < 1) return std::nullopt;
  for (ElementSet c : m.circuits())
    if (c.size() < r) return std::nullopt;
  std::vector<ElementSet> copoints;
  for (const Flat& f : flat_lattice(m).flats)
    if (f.rank == r - 1 && f.set.size() >= r) copoints.push_back(f.set);
  return copoints;
}

Output cmd_charpoly(const Matroid& m) {
  const CharacteristicPolynomial chi = char_poly(m);
  Output o;
  o.text = chi.value.to_string({"λ"});
  if (chi.zero_due_to_loop) o.text += " (the matroid has a loop)";
  o.data = polynomial_json(chi.value, {"λ"});
  o.data["zero_due_to_loop"] = chi.zero_due_to_loop;
  return o;
}

Output cmd_tutte(const Matroid& m, const std::string& method) {
  Output o;
  if (method == "all") {
    std::optional<BivariatePolynomial> first;
    json per_method = json::object();
    for (TutteMethod t : {TutteMethod::kSubsetExpansion, TutteMethod::kDeletionContraction,
                          TutteMethod::kActivities}) {
      const BivariatePolynomial p = tutte(m, t);
      o.text += std::string(method_name(t)) + ": " + p.to_string({"x", "y"}) + "\n";
      per_method[std::string(method_name(t))] = polynomial_json(p, {"x", "y"});
      if (!first) {
        first = p;
      } else if (!(p == *first)) {
        throw CrossCheckError("Tutte methods disagree: " + std::string(method_name(t)) + " gives " +
                              p.to_string({"x", "y"}) + ", subset-expansion gives " +
                              first->to_string({"x", "y"}));
      }
    }
    o.text += "methods agree";
    o.data = {{"methods", per_method}, {"agree", true}};
    return o;
  }
  const BivariatePolynomial p = method == "default" ? tutte(m) : tutte(m, parse_tutte_method(method));
  o.text = p.to_string({"x", "y"});
  o.data = polynomial_json(p, {"x", "y"});
  return o;
}

Output cmd_nbc(const Matroid& m, bool by_flat) {
  const NbcCatalog catalog = nbc_sets(m);
  Output o;
  std::ostringstream text;
  if (by_flat) {
    json flats = json::array();
    for (const auto& [flat, sets] : catalog.by_flat) {
      text << "flat " << flat.to_string() << " (rank " << m.rank(flat) << "): " << join_sets(sets)
           << "\n";
      json family = json::array();
      for (ElementSet s : sets) family.push_back(labels_of(s));
      flats.push_back({{"flat", labels_of(flat)}, {"rank", m.rank(flat)}, {"nbc", family}});
    }
    o.data["by_flat"] = flats;
  } else {
    json sizes = json::array();
    for (int k = 0; k <= m.rank(); ++k) {
      const std::vector<ElementSet> sets = catalog.of_size(k);
      text << "size " << k << " (" << sets.size() << "): " << join_sets(sets) << "\n";
      json family = json::array();
      for (ElementSet s : sets) family.push_back(labels_of(s));
      sizes.push_back(family);
    }
    o.data["by_size"] = sizes;
  }
  json whitney = json::array();
  for (const Integer& w : catalog.whitney_numbers()) whitney.push_back(to_string(w));
  o.data["counts"] = whitney;
  o.text = text.str();
  if (!o.text.empty()) o.text.pop_back();
  return o;
}

Output cmd_os_hilbert(const Matroid& m) {
  const UnivariatePolynomial h = hilbert_series(OsContext(m));
  return {h.to_string({"t"}), polynomial_json(h, {"t"})};
}

Output cmd_os_dims(const Matroid& m) {
  const OsDimensions dims = os_dimensions(OsContext(m));
  std::ostringstream text;
  json by_flat = json::array();
  for (std::size_t k = 0; k < dims.by_degree.size(); ++k)
    text << "degree " << k << ": " << dims.by_degree[k] << "\n";
  for (const auto& [flat, d] : dims.by_flat) {
    text << "flat " << flat.to_string() << ": " << d << "\n";
    by_flat.push_back({{"flat", labels_of(flat)}, {"dimension", d}});
  }
  Output o{text.str(), {{"by_degree", dims.by_degree}, {"by_flat", by_flat}}};
  o.text.pop_back();
  return o;
}

Output cmd_os_reduce(const Matroid& m, const std::string& element) {
  const OsContext ctx(m);
  const ExteriorElement a = parse_exterior_element(element);
  if (a.max_label() > m.size())
    throw InputError("element " + a.to_string() + " uses labels outside 1.." + std::to_string(m.size()));
  const ExteriorElement reduced = reduce_to_nbc(ctx, a);
  return {reduced.to_string(), {{"input", exterior_json(a)}, {"normal_form", exterior_json(reduced)}}};
}

Output cmd_g_invariant(const Matroid& m, const std::string& method, bool closed_form) {
  GMethod g_method = GMethod::kChainDp;
  if (method == "permutations") {
    g_method = GMethod::kPermutations;
  } else if (method != "chain-dp") {
    throw InputError("unknown G-invariant method '" + method + "' (expected chain-dp or permutations)");
  }
  const GInvariant g = g_invariant(m, g_method);
  Output o{g.to_string(), symbols_json(g)};
  if (closed_form) {
    const auto copoints = paving_copoints(m);
    if (!copoints) throw InputError("--closed-form needs a paving matroid of rank >= 1");
    const GInvariant closed = paving_g(m.size(), m.rank(), std::span<const ElementSet>(*copoints));
    if (!(closed == g))
      throw CrossCheckError("paving closed form " + closed.to_string() + " differs from " + g.to_string());
    o.text += "\nclosed form agrees";
    o.data["closed_form"] = symbols_json(closed);
  }
  return o;
}

Output cmd_specialize(const Matroid& m) {
  const BivariatePolynomial t = specialize_to_tutte(g_invariant(m));
  const BivariatePolynomial expected = tutte(m);
  if (!(t == expected))
    throw CrossCheckError("specialization " + t.to_string({"x", "y"}) + " differs from T(M) = " +
                          expected.to_string({"x", "y"}));
  return {t.to_string({"x", "y"}), polynomial_json(t, {"x", "y"})};
}

Output cmd_g_dual(const Matroid& m) {
  const GInvariant d = g_dual(g_invariant(m));
  const GInvariant direct = g_invariant(dual(m));
  if (!(d == direct))
    throw CrossCheckError("dual rule gives " + d.to_string() + " but G(M*) = " + direct.to_string());
  return {d.to_string(), symbols_json(d)};
}

void check_shape(int n, int r) {
  if (n < 0 || n > kMaxLabel) throw InputError("--n outside 0.." + std::to_string(kMaxLabel));
  if (r < 0 || r > n) throw InputError("--r must satisfy 0 <= r <= n");
}

Output cmd_freedom_expand(int n, int r) {
  check_shape(n, r);
  const auto expansion = freedom_expansion(n, r);
  std::ostringstream text;
  json rows = json::array();
  for (auto it = expansion.rbegin(); it != expansion.rend(); ++it) {
    text << "[" << it->first.to_string() << "] = ";
    bool first = true;
    for (auto jt = it->second.coefficients.rbegin(); jt != it->second.coefficients.rend(); ++jt) {
      const bool negative = jt->second < 0;
      text << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
      const Rational magnitude = negative ? Rational(-jt->second) : jt->second;
      if (magnitude != 1) text << to_string(magnitude) << "*";
      text << "G(F(" << jt->first.to_string() << "))";
      first = false;
    }
    text << "\n";
    rows.push_back({{"sequence", it->first.to_string()}, {"expansion", symbols_json(it->second)}});
  }
  Output o{text.str(), {{"n", n}, {"r", r}, {"symbols", rows}}};
  if (!o.text.empty()) o.text.pop_back();
  return o;
}

Output cmd_tutte_freedom_basis(const Matroid& m) {
  const auto coeffs = tutte_in_freedom_basis(m);
  std::ostringstream text;
  json terms = json::array();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    text << it->first.to_string() << ": " << to_string(it->second) << "\n";
    terms.push_back({{"sequence", it->first.to_string()}, {"coefficient", to_string(it->second)}});
  }
  text << "recombination reproduces T(M)";
  return {text.str(), {{"coefficients", terms}, {"certified", true}}};
}

Output cmd_span_dim(int n, int r) {
  check_shape(n, r);
  const int dim = tutte_span_dimension(n, r);
  const int expected = r * (n - r) + 1;
  if (dim != expected)
    throw CrossCheckError("dim T(" + std::to_string(n) + "," + std::to_string(r) + ") = " +
                          std::to_string(dim) + " but r(n-r)+1 = " + std::to_string(expected));
  return {"dim T(" + std::to_string(n) + "," + std::to_string(r) + ") = " + std::to_string(dim),
          {{"n", n}, {"r", r}, {"dimension", dim}}};
}

Output cmd_verify_syzygy(const std::string& vector) {
  const SymbolVector v = parse_symbol_vector(vector);
  const bool ok = verify_syzygy(v);
  return {ok ? "true" : "false", {{"vector", symbols_json(v)}, {"syzygy", ok}}};
}

Output cmd_f_invariant(const Matroid& m, int max_value) {
  if (max_value < 1) throw InputError("--max-value must be at least 1");
  const auto counts = f_invariant_truncated(m, max_value);
  std::ostringstream text;
  json rows = json::array();
  std::uint64_t total = 0;
  for (const auto& [values, count] : counts) {
    text << "(";
    for (std::size_t i = 0; i < values.size(); ++i) text << (i ? "," : "") << values[i];
    text << "): " << count << "\n";
    rows.push_back({{"value_counts", values}, {"functions", count}});
    total += count;
  }
  text << "generic functions: " << total;
  return {text.str(), {{"max_value", max_value}, {"classes", rows}, {"total", total}}};
}

std::string describe(const Matroid& m) {
  return "(n=" + std::to_string(m.size()) + ", r=" + std::to_string(m.rank()) +
         ", bases=" + std::to_string(m.basis_count()) + ")";
}

Output cmd_comultiply(const Matroid& m) {
  const TensorSum sum = comultiply(m);
  std::ostringstream text;
  json rows = json::array();
  for (const auto& [key, term] : sum.terms) {
    text << term.multiplicity << " x " << describe(term.left) << " (x) " << describe(term.right) << "\n";
    rows.push_back({{"multiplicity", term.multiplicity},
                    {"left", json::parse(serialize(term.left))},
                    {"right", json::parse(serialize(term.right))}});
  }
  text << "total multiplicity: " << sum.total_multiplicity();
  return {text.str(), {{"terms", rows}, {"total_multiplicity", sum.total_multiplicity()}}};
}

constexpr int kSymbolicConvolutionGuard = 8;
constexpr int kSymbolicChromaticGuard = 8;

Output cmd_verify_convolution(const Matroid& m, std::size_t samples, std::uint64_t seed) {
  const auto points = sample_points(samples, seed);
  if (!verify_R_convolution(m, points))
    throw CrossCheckError("corank-nullity convolution fails at a sample point (seed " +
                          std::to_string(seed) + ")");
  std::string text = "numeric: pass (" + std::to_string(samples) + " points, seed " +
                     std::to_string(seed) + ")\n";
  json data = {{"numeric", true}, {"samples", samples}, {"seed", seed}};
  if (m.size() <= kSymbolicConvolutionGuard) {
    if (!verify_R_convolution_symbolic(m))
      throw CrossCheckError("corank-nullity convolution fails symbolically");
    text += "symbolic: pass";
    data["symbolic"] = true;
  } else {
    text += "symbolic: skipped (n > " + std::to_string(kSymbolicConvolutionGuard) + ")";
    data["symbolic"] = nullptr;
  }
  return {text, data};
}

Output cmd_verify_chromatic(const MatroidDocument& doc, std::size_t samples, std::uint64_t seed) {
  if (!doc.graph) throw InputError("verify-chromatic needs a \"graph\" document");
  const auto points = sample_pairs(samples, seed);
  if (!verify_chromatic_convolution(*doc.graph, points))
    throw CrossCheckError("chromatic convolution fails at a sample point (seed " +
                          std::to_string(seed) + ")");
  std::string text = "numeric: pass (" + std::to_string(samples) + " points, seed " +
                     std::to_string(seed) + ")\n";
  json data = {{"numeric", true}, {"samples", samples}, {"seed", seed}};
  if (doc.graph->vertex_count <= kSymbolicChromaticGuard) {
    if (!verify_chromatic_convolution_symbolic(*doc.graph))
      throw CrossCheckError("chromatic convolution fails symbolically");
    text += "symbolic: pass";
    data["symbolic"] = true;
  } else {
    text += "symbolic: skipped (more than " + std::to_string(kSymbolicChromaticGuard) + " vertices)";
    data["symbolic"] = nullptr;
  }
  return {text, data};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matroid invariants: characteristic and Tutte polynomials, Orlik-Solomon algebras, "
               "G-invariants and convolution identities.",
               "matroid"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string file;
  std::function<Output()> action;
  auto file_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Matroid document (JSON), or - for stdin")->required();
    return sub;
  };
  auto with_matroid = [&](std::function<Output(const Matroid&)> f) {
    return [&file, f] { return f(load(file).matroid); };
  };

  file_command("charpoly", "Characteristic polynomial")->callback([&] {
    action = with_matroid(cmd_charpoly);
  });

  std::string tutte_method = "default";
  file_command("tutte", "Tutte polynomial")
      ->callback([&] {
        action = with_matroid([&](const Matroid& m) { return cmd_tutte(m, tutte_method); });
      })
      ->add_option("--method", tutte_method,
                   "subset-expansion, deletion-contraction, activities, all, or default "
                   "(subset expansion checked against deletion-contraction)");

  bool by_flat = false;
  file_command("nbc", "No-broken-circuit sets")
      ->callback([&] { action = with_matroid([&](const Matroid& m) { return cmd_nbc(m, by_flat); }); })
      ->add_flag("--by-flat", by_flat, "Group by the flat each set spans");

  file_command("os-hilbert", "Hilbert series of the Orlik-Solomon algebra")->callback([&] {
    action = with_matroid(cmd_os_hilbert);
  });
  file_command("os-dims", "Orlik-Solomon dimensions by degree and by flat")->callback([&] {
    action = with_matroid(cmd_os_dims);
  });

  std::string element;
  file_command("os-reduce", "Normal form of an exterior element modulo the Orlik-Solomon ideal")
      ->callback([&] {
        action = with_matroid([&](const Matroid& m) { return cmd_os_reduce(m, element); });
      })
      ->add_option("--element", element, "Element such as \"e23 - 1/2*e13\"")
      ->required();

  std::string g_method = "chain-dp";
  bool closed_form = false;
  CLI::App* g_cmd = file_command("g-invariant", "G-invariant in the symbol basis");
  g_cmd->add_option("--method", g_method, "chain-dp or permutations");
  g_cmd->add_flag("--closed-form", closed_form, "Also evaluate the paving closed form");
  g_cmd->callback([&] {
    action = with_matroid([&](const Matroid& m) { return cmd_g_invariant(m, g_method, closed_form); });
  });

  file_command("specialize", "Tutte polynomial recovered from the G-invariant")->callback([&] {
    action = with_matroid(cmd_specialize);
  });
  file_command("g-dual", "G-invariant of the dual via the reversal rule")->callback([&] {
    action = with_matroid(cmd_g_dual);
  });

  int shape_n = -1;
  int shape_r = -1;
  CLI::App* expand_cmd = app.add_subcommand("freedom-expand", "Symbols as combinations of G(F(r))");
  expand_cmd->add_option("--n", shape_n)->required();
  expand_cmd->add_option("--r", shape_r)->required();
  expand_cmd->callback([&] { action = [&] { return cmd_freedom_expand(shape_n, shape_r); }; });

  file_command("tutte-freedom-basis", "Tutte polynomial in the freedom-matroid basis")->callback([&] {
    action = with_matroid(cmd_tutte_freedom_basis);
  });

  CLI::App* span_cmd = app.add_subcommand("span-dim", "Dimension of the span of Tutte polynomials");
  span_cmd->add_option("--n", shape_n)->required();
  span_cmd->add_option("--r", shape_r)->required();
  span_cmd->callback([&] { action = [&] { return cmd_span_dim(shape_n, shape_r); }; });

  std::string vector;
  app.add_subcommand("verify-syzygy", "Check that a symbol combination specializes to zero")
      ->callback([&] { action = [&] { return cmd_verify_syzygy(vector); }; })
      ->add_option("vector", vector, "Combination such as \"[1010100] - [1011000]\"")
      ->required();

  int max_value = 2;
  file_command("f-invariant", "Counts of M-generic functions by value multiplicities")
      ->callback([&] {
        action = with_matroid([&](const Matroid& m) { return cmd_f_invariant(m, max_value); });
      })
      ->add_option("--max-value", max_value, "Largest function value");

  file_command("comultiply", "Restriction-contraction coproduct")->callback([&] {
    action = with_matroid(cmd_comultiply);
  });

  std::size_t samples = 10;
  std::uint64_t seed = kDefaultSampleSeed;
  CLI::App* conv_cmd = file_command("verify-convolution", "Corank-nullity convolution identity");
  conv_cmd->add_option("--samples", samples);
  conv_cmd->add_option("--seed", seed);
  conv_cmd->callback([&] {
    action = with_matroid([&](const Matroid& m) { return cmd_verify_convolution(m, samples, seed); });
  });

  CLI::App* chrom_cmd = file_command("verify-chromatic", "Chromatic convolution identity on a graph");
  chrom_cmd->add_option("--samples", samples);
  chrom_cmd->add_option("--seed", seed);
  chrom_cmd->callback([&] { action = [&] { return cmd_verify_chromatic(load(file), samples, seed); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }

  try {
    const Output result = action();
    if (format == "json") {
      out << result.data.dump(2) << "\n";
    } else {
      out << result.text << "\n";
    }
    return kExitOk;
  } catch (const CrossCheckError& e) {
    err << "cross-check failure: " << e.what() << "\n";
    return kExitCrossCheck;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitCrossCheck;
  }
}

}  // namespace matroid::cli
