// Copyright 2026 The tensorperm Authors
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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <stdexcept>

#include "tensorperm/gellmann.hpp"
#include "tensorperm/matrix_io.hpp"

namespace tpm {

using namespace tensorperm;

namespace {

struct CliConfig {
  std::string dims;
  std::string sigma;
  std::string format;
  std::string output;
  std::string input;
  Index n = 0;
  Index order = 0;
  double tolerance = 1e-12;
  Index dense_bound = kDefaultDenseBound;
  std::size_t reps = 100;
};

TensorPermSpec make_spec(const CliConfig& cfg, bool default_reversal) {
  DimList dims(parse_index_list(cfg.dims, "--dims"));
  if (cfg.sigma.empty()) {
    if (!default_reversal) throw std::invalid_argument("--sigma is required");
    return TensorPermSpec(dims, Sigma::reversal(dims.size()));
  }
  return TensorPermSpec(dims, Sigma(parse_index_list(cfg.sigma, "--sigma")));
}

// Writes to --output when given, otherwise to out.
template <class Fn>
void emit(const CliConfig& cfg, std::ostream& out, Fn&& write) {
  if (cfg.output.empty()) {
    write(out);
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open " + cfg.output);
  write(file);
  if (!file) throw std::runtime_error("failed writing " + cfg.output);
}

std::string format_real(double x, double tolerance) {
  if (std::abs(x) <= tolerance) x = 0.0;
  std::ostringstream s;
  s << std::setprecision(10) << x;
  return s.str();
}

int cmd_gen(const CliConfig& cfg, std::ostream& out) {
  const TensorPermSpec spec = make_spec(cfg, false);
  const std::string format = cfg.format.empty() ? "perm" : cfg.format;
  if (format == "perm") {
    const IndexPerm perm = index_perm(spec);
    emit(cfg, out, [&](std::ostream& o) { write_perm(o, perm); });
    return exit_code::kOk;
  }
  const IntMatrix u = build_delta(spec, cfg.dense_bound);
  emit(cfg, out, [&](std::ostream& o) {
    if (format == "mm") {
      write_matrix_market(o, u);
    } else if (format == "dense") {
      write_dense(o, u);
    } else {
      write_blocks(o, u, spec);
    }
  });
  return exit_code::kOk;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  const TensorPermSpec spec = make_spec(cfg, false);
  const Index order = spec.order();
  if (order > cfg.dense_bound) {
    throw CapacityError("order " + std::to_string(order) +
                        " exceeds the dense bound " +
                        std::to_string(cfg.dense_bound));
  }
  const Index k = spec.dims().size();
  std::mt19937_64 rng(0x5eedu);
  std::uniform_int_distribution<Integer> entry(-9, 9);
  bool all = true;
  auto report = [&](const std::string& name, bool ok) {
    out << (ok ? "PASS " : "FAIL ") << name << '\n';
    all = all && ok;
  };

  const IntMatrix delta = build_delta(spec, cfg.dense_bound);
  const IndexPerm perm = index_perm(spec);
  report("permutation-matrix shape", is_permutation_matrix(delta));

  bool agree = build_elementary_sum(spec, cfg.dense_bound) == delta &&
               to_dense(perm, cfg.dense_bound) == delta;
  if (k == 2 && spec.sigma() == Sigma{2, 1}) {
    const Index n = spec.dims().dim(1);
    const Index p = spec.dims().dim(2);
    agree = agree && build_stride_rule(n, p, cfg.dense_bound) == delta &&
            build_stride_closed_form(n, p, cfg.dense_bound) == delta;
  }
  report("constructor agreement", agree);

  bool vectors_ok = true;
  for (int sample = 0; sample < 100 && vectors_ok; ++sample) {
    std::vector<IntMatrix> factors;
    for (Index t = 1; t <= k; ++t) {
      IntMatrix a(spec.dims().dim(t), 1);
      for (Integer& x : a.data()) x = entry(rng);
      factors.push_back(std::move(a));
    }
    std::vector<IntMatrix> permuted;
    for (Index t = 1; t <= k; ++t) {
      permuted.push_back(factors[spec.sigma().image(t) - 1]);
    }
    const IntMatrix in = kron_all<Integer>(factors, order);
    const IntMatrix expect = kron_all<Integer>(permuted, order);
    const std::vector<Integer> got = apply<Integer>(spec, in.data());
    vectors_ok = std::equal(got.begin(), got.end(), expect.data().begin());
  }
  report("tensor-product vectors permuted (100 samples)", vectors_ok);

  // Dense conjugation costs O(N^3) per sample.
  const int samples = order <= 64 ? 100 : order <= 256 ? 10 : order <= 1024 ? 1 : 0;
  if (samples == 0) {
    out << "SKIP matrix conjugation (order " << order << " > 1024)\n";
  } else {
    bool conj_ok = true;
    for (int sample = 0; sample < samples && conj_ok; ++sample) {
      std::vector<IntMatrix> factors;
      for (Index t = 1; t <= k; ++t) {
        IntMatrix a(spec.dims().dim(t), spec.dims().dim(t));
        for (Integer& x : a.data()) x = entry(rng);
        factors.push_back(std::move(a));
      }
      conj_ok = conjugation_holds(delta, spec, factors, cfg.dense_bound);
    }
    report("matrix conjugation (" + std::to_string(samples) + " samples)",
           conj_ok);
  }

  const TensorPermSpec dual(spec.output_dims(), sigma_inverse(spec.sigma()));
  report("transpose duality",
         transpose(delta) == build_delta(dual, cfg.dense_bound) &&
             (perm * perm.inverse()).is_identity());
  return all ? exit_code::kOk : exit_code::kCheckFailed;
}

int cmd_classify(const CliConfig& cfg, std::ostream& out) {
  if (!cfg.input.empty()) {
    std::ifstream file(cfg.input);
    if (!file) throw std::invalid_argument("cannot open " + cfg.input);
    const IntMatrix m = read_matrix_market(file, cfg.dense_bound);
    const std::vector<TcmLabel> labels = classify_tcm(m, cfg.dense_bound);
    if (labels.empty()) out << "not a tensor commutation matrix\n";
    for (const TcmLabel& l : labels) out << l.to_string() << '\n';
    return exit_code::kOk;
  }
  if (cfg.order < 1) throw std::invalid_argument("--order or --input required");
  if (cfg.order > cfg.dense_bound) {
    throw CapacityError("order " + std::to_string(cfg.order) +
                        " exceeds the dense bound " +
                        std::to_string(cfg.dense_bound));
  }
  const std::vector<TcmLabel> labels = tcm_labels(cfg.order);
  std::vector<IndexPerm> perms;
  out << "order=" << cfg.order << '\n';
  for (const TcmLabel& l : labels) {
    perms.push_back(tcm_perm(l.n, l.p));
    out << l.to_string();
    if (perms.back().is_identity()) out << " identity";
    for (Index e = 0; e + 1 < perms.size(); ++e) {
      if (perms[e] == perms.back()) {
        out << " (= " << labels[e].to_string() << ")";
        break;
      }
    }
    out << '\n';
  }
  return exit_code::kOk;
}

int cmd_decompose(const CliConfig& cfg, std::ostream& out) {
  if (!cfg.format.empty() && cfg.format != "text") {
    throw std::invalid_argument("decompose supports --format text only");
  }
  const SwapDecomposition d = decompose_swap(cfg.n, cfg.dense_bound);
  const Index m = d.basis_size();
  std::vector<std::string> lines;
  for (Index a = 0; a < m; ++a) {
    for (Index b = 0; b < m; ++b) {
      if (a == 0 && b == 0) continue;
      const Complex c = d.coefficient(a, b);
      if (std::abs(c) <= cfg.tolerance) continue;
      lines.push_back(std::to_string(a) + ' ' + std::to_string(b) + ' ' +
                      format_real(c.real(), cfg.tolerance) + ' ' +
                      format_real(c.imag(), cfg.tolerance));
    }
  }
  emit(cfg, out, [&](std::ostream& o) {
    o << "n=" << d.n << '\n'
      << "c00=" << format_real(d.c00, cfg.tolerance) << '\n'
      << "terms=" << lines.size() << '\n';
    for (const std::string& l : lines) o << l << '\n';
  });
  return exit_code::kOk;
}

bool is_number(const std::string& token) {
  double value = 0.0;
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc() && ptr == end;
}

int cmd_apply(const CliConfig& cfg, std::ostream& out) {
  const TensorPermSpec spec = make_spec(cfg, false);
  std::vector<std::string> tokens;
  auto slurp = [&](std::istream& in) {
    tokens.assign(std::istream_iterator<std::string>(in),
                  std::istream_iterator<std::string>());
  };
  if (cfg.input.empty() || cfg.input == "-") {
    slurp(std::cin);
  } else {
    std::ifstream file(cfg.input);
    if (!file) throw std::invalid_argument("cannot open " + cfg.input);
    slurp(file);
  }
  for (const std::string& t : tokens) {
    if (!is_number(t)) throw ParseError("not a number: " + t);
  }
  // Entries are permuted as text so every value is reproduced exactly.
  const std::vector<std::string> result =
      apply<std::string>(spec, std::span<const std::string>(tokens));
  emit(cfg, out, [&](std::ostream& o) {
    for (const std::string& v : result) o << v << '\n';
  });
  return exit_code::kOk;
}

int cmd_bench(const CliConfig& cfg, std::ostream& out) {
  const TensorPermSpec spec = make_spec(cfg, true);
  const BenchResult r = run_bench(spec, cfg.reps, cfg.dense_bound);
  out << std::setprecision(6);
  out << "implicit apply: " << r.implicit_ns << " ns/application (reps="
      << cfg.reps << ")\n";
  if (r.dense_ns) {
    out << "dense matvec: " << *r.dense_ns << " ns/application\n";
    out << "speedup: " << *r.dense_ns / std::max(r.implicit_ns, 1e-9) << "x\n";
  } else {
    out << "dense matvec: skipped: exceeds dense bound ("
        << spec.order() << " > " << cfg.dense_bound << ")\n";
  }
  out << "bench dims=" << spec.dims().to_string()
      << " implicit_ns=" << r.implicit_ns << " dense_ns=";
  if (r.dense_ns) {
    out << *r.dense_ns;
  } else {
    out << "skipped";
  }
  out << '\n';
  return exit_code::kOk;
}

}  // namespace

std::vector<Index> parse_index_list(const std::string& text,
                                    const std::string& what) {
  std::vector<Index> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    Index value = 0;
    const char* end = item.data() + item.size();
    const auto [ptr, ec] = std::from_chars(item.data(), end, value);
    if (item.empty() || ec != std::errc() || ptr != end || value == 0) {
      throw std::invalid_argument(what + " must be a comma-separated list of "
                                  "positive integers, got '" + text + "'");
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

BenchResult run_bench(const TensorPermSpec& spec, std::size_t reps,
                      Index dense_bound) {
  using Clock = std::chrono::steady_clock;
  reps = std::max<std::size_t>(reps, 1);
  const Index order = spec.order();
  std::vector<Integer> v(order);
  for (Index e = 0; e < order; ++e) v[e] = static_cast<Integer>(e + 1);
  const std::span<const Integer> input(v);

  // Summed so the optimizer cannot drop the work.
  volatile Integer sink = 0;
  const IndexPerm perm = index_perm(spec);
  auto start = Clock::now();
  for (std::size_t rep = 0; rep < reps; ++rep) {
    sink = sink + perm.apply(input)[rep % order];
  }
  BenchResult r;
  r.implicit_ns =
      std::chrono::duration<double, std::nano>(Clock::now() - start).count() /
      static_cast<double>(reps);

  if (order <= dense_bound) {
    const IntMatrix dense = to_dense(perm, dense_bound);
    start = Clock::now();
    for (std::size_t rep = 0; rep < reps; ++rep) {
      sink = sink + matvec(dense, input)[rep % order];
    }
    r.dense_ns = std::chrono::duration<double, std::nano>(Clock::now() - start)
                     .count() /
                 static_cast<double>(reps);
  }
  return r;
}

int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Tensor permutation matrices: build, apply, verify, decompose"};
  app.require_subcommand(1);

  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("--dims", cfg.dims, "factor dimensions, e.g. 3,2")
        ->required();
    sub->add_option("--sigma", cfg.sigma, "images sigma(1),...,sigma(k)");
  };
  auto add_bound = [&](CLI::App* sub) {
    sub->add_option("--dense-bound", cfg.dense_bound,
                    "largest dense matrix order")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* gen = app.add_subcommand("gen", "emit U(sigma)");
  add_spec(gen);
  gen->add_option("--format", cfg.format, "mm, perm, dense or blocks")
      ->check(CLI::IsMember({"mm", "perm", "dense", "blocks"}));
  gen->add_option("--output", cfg.output, "output file (default stdout)");
  add_bound(gen);

  CLI::App* verify = app.add_subcommand("verify", "check U(sigma) properties");
  add_spec(verify);
  add_bound(verify);

  CLI::App* classify =
      app.add_subcommand("classify", "list tensor commutation matrices");
  classify->add_option("--order", cfg.order, "matrix order");
  classify->add_option("--input", cfg.input, "Matrix Market file to classify");
  add_bound(classify);

  CLI::App* decompose =
      app.add_subcommand("decompose", "expand U_{n(x)n} over lambda_a (x) lambda_b");
  decompose->add_option("--n", cfg.n, "factor dimension")->required();
  decompose->add_option("--format", cfg.format, "text");
  decompose->add_option("--tolerance", cfg.tolerance,
                        "drop coefficients with modulus at or below this");
  decompose->add_option("--output", cfg.output, "output file (default stdout)");
  add_bound(decompose);

  CLI::App* apply_cmd = app.add_subcommand("apply", "permute a vector");
  add_spec(apply_cmd);
  apply_cmd->add_option("--input", cfg.input, "vector file (default stdin)");
  apply_cmd->add_option("--output", cfg.output, "output file (default stdout)");

  CLI::App* bench = app.add_subcommand("bench", "time implicit vs dense apply");
  add_spec(bench);
  bench->add_option("--reps", cfg.reps, "repetitions")
      ->check(CLI::PositiveNumber);
  add_bound(bench);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (classify->parsed()) return cmd_classify(cfg, out);
    if (decompose->parsed()) return cmd_decompose(cfg, out);
    if (apply_cmd->parsed()) return cmd_apply(cfg, out);
    if (bench->parsed()) return cmd_bench(cfg, out);
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kCapacity;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kCheckFailed;
  }
  return exit_code::kUsage;
}

}  // namespace tpm
