// Copyright 2026 The tsimg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tsimg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "tsimg/classify.hpp"
#include "tsimg/error.hpp"
#include "tsimg/gaf.hpp"
#include "tsimg/impute.hpp"
#include "tsimg/ingest.hpp"
#include "tsimg/io.hpp"
#include "tsimg/kernels/kernels.hpp"
#include "tsimg/mtf.hpp"
#include "tsimg/reconstruct.hpp"

#ifndef TSIMG_VERSION
#define TSIMG_VERSION "0.0.0"
#endif

namespace tsimg::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string human(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6g", v);
  return buffer;
}

std::string dataset_name(const std::string& path) {
  std::string stem = fs::path(path).stem().string();
  for (const char* suffix : {"_TRAIN", "_TEST"}) {
    const std::string s = suffix;
    if (stem.size() > s.size() && stem.ends_with(s)) return stem.substr(0, stem.size() - s.size());
  }
  return stem;
}

// "1e-4..1e4" expands to every power of ten in the range; otherwise a comma list.
std::vector<double> parse_penalties(const std::string& text) {
  std::vector<double> out;
  const auto dots = text.find("..");
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || !(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorCode::InvalidArgument, "--penalties: bad value '" + s + "'");
    }
    return v;
  };
  if (dots != std::string::npos) {
    const double lo = std::log10(number(text.substr(0, dots)));
    const double hi = std::log10(number(text.substr(dots + 2)));
    if (std::abs(lo - std::round(lo)) > 1e-9 || std::abs(hi - std::round(hi)) > 1e-9 || lo > hi) {
      throw Error(ErrorCode::InvalidArgument, "--penalties range must run between powers of ten");
    }
    for (long e = std::lround(lo); e <= std::lround(hi); ++e) out.push_back(std::pow(10.0, e));
    return out;
  }
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(number(item));
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "--penalties is empty");
  return out;
}

fs::path find_split(const fs::path& dir, const std::string& name, const std::string& split) {
  const std::string base = name + "_" + split;
  for (const fs::path& folder : {dir / name, dir}) {
    for (const char* ext : {".tsv", ".txt", ".csv", ""}) {
      const fs::path candidate = folder / (base + ext);
      if (fs::is_regular_file(candidate)) return candidate;
    }
  }
  throw Error(ErrorCode::IoFailure, "no " + split + " file for dataset '" + name + "' under " +
                                        dir.string());
}

struct Manifest {
  std::string command;
  std::vector<std::string> argv;
  json parameters = json::object();
  json inputs = json::array();
  json outputs = json::array();

  void write(const std::string& path) const {
    json doc;
    doc["tool"] = "tsimg";
    doc["version"] = TSIMG_VERSION;
    doc["command"] = command;
    doc["argv"] = argv;
    doc["parameters"] = parameters;
    doc["inputs"] = inputs;
    doc["outputs"] = outputs;
    write_text_file(path, doc.dump(2) + "\n");
  }
};

void write_report(const std::string& path, const std::string& kv) {
  if (!path.empty()) write_text_file(path, kv);
}

struct Context {
  std::vector<std::string> argv;
  std::ostream& out;
  std::ostream& err;
};

Manifest start_manifest(const Context& ctx, const std::string& command) {
  Manifest m;
  m.command = command;
  m.argv = ctx.argv;
  m.parameters["isa"] = std::string(kernels::to_string(kernels::active_isa()));
  return m;
}

// ---- encode ---------------------------------------------------------------

struct EncodeArgs {
  std::string input;
  std::string encoding = "gasf";
  std::string rescale = "unit";
  std::size_t paa = 0;
  std::size_t quantiles = 8;
  std::size_t image_size = 0;
  std::string out_dir;
  bool png = false;
};

void run_encode(const EncodeArgs& a, const Context& ctx) {
  const auto series = parse_ucr(a.input);
  validate_uniform(series);
  const std::size_t n = series.front().length();
  if (a.paa && a.image_size && a.paa != a.image_size) {
    throw Error(ErrorCode::InvalidArgument, "--paa and --image-size disagree");
  }
  const std::size_t size = a.image_size ? a.image_size : (a.paa ? a.paa : n);
  const RescaleMode mode = parse_rescale_mode(a.rescale);
  if (a.encoding != "gasf" && a.encoding != "gadf" && a.encoding != "mtf" &&
      a.encoding != "compound") {
    throw Error(ErrorCode::InvalidArgument, "unknown --encoding '" + a.encoding + "'");
  }

  Manifest manifest = start_manifest(ctx, "encode");
  manifest.parameters["encoding"] = a.encoding;
  manifest.parameters["rescale"] = a.rescale;
  manifest.parameters["size"] = size;
  manifest.parameters["quantiles"] = a.quantiles;
  manifest.parameters["png"] = a.png;
  manifest.parameters["series_length"] = n;
  manifest.inputs.push_back(a.input);

  const fs::path dir(a.out_dir);
  fs::create_directories(dir);
  auto emit_matrix = [&](const FieldMatrix& m, const std::string& stem, json& entry) {
    const std::string csv = stem + ".csv";
    write_matrix_csv(m, dir / csv);
    entry["files"].push_back(csv);
    if (a.png && a.encoding != "compound") {
      const std::string png = stem + ".png";
      render_png(m, dir / png);
      entry["files"].push_back(png);
    }
  };
  for (std::size_t i = 0; i < series.size(); ++i) {
    char stem_buffer[32];
    std::snprintf(stem_buffer, sizeof stem_buffer, "series_%05zu", i);
    const std::string stem = stem_buffer;
    json entry;
    entry["index"] = i;
    entry["label"] = series[i].label.value_or(0);
    entry["files"] = json::array();
    if (a.encoding == "gasf" || a.encoding == "gadf") {
      const FieldKind kind = parse_field_kind(a.encoding);
      emit_matrix(encode_gaf(series[i], mode, PaaConfig{size}, kind), stem + "_" + a.encoding, entry);
    } else if (a.encoding == "mtf") {
      const FieldMatrix m = encode_mtf(series[i], a.quantiles, size);
      entry["mtf_native_size"] = m.size();
      emit_matrix(m, stem + "_mtf", entry);
    } else {
      const CompoundImage img = compound_image(series[i], size, a.quantiles, mode);
      entry["mtf_native_size"] = img.mtf_native_size;
      emit_matrix(img.gasf, stem + "_gasf", entry);
      emit_matrix(img.gadf, stem + "_gadf", entry);
      emit_matrix(img.mtf, stem + "_mtf", entry);
      if (a.png) {
        const std::string png = stem + "_compound.png";
        render_png(img, dir / png);
        entry["files"].push_back(png);
      }
    }
    manifest.outputs.push_back(entry);
  }
  manifest.write(manifest_path_for(a.out_dir, true));
  ctx.out << "encoded " << series.size() << " series as " << a.encoding << " (" << size << "x"
          << size << ") into " << a.out_dir << "\n";
  ctx.out << "series=" << series.size() << "\nsize=" << size << "\n";
}

// ---- decode ---------------------------------------------------------------

struct DecodeArgs {
  std::string input;
  std::string out;
};

void run_decode(const DecodeArgs& a, const Context& ctx) {
  const FieldMatrix m = read_matrix_csv(a.input);
  const ScaledSeries s = reconstruct_series(m);
  const std::vector<TimeSeries> rows{{s.values, 0}};
  write_ucr(rows, a.out);
  Manifest manifest = start_manifest(ctx, "decode");
  manifest.inputs.push_back(a.input);
  manifest.outputs.push_back(a.out);
  manifest.write(manifest_path_for(a.out, false));
  ctx.out << "reconstructed " << s.length() << " points from " << a.input << "\n";
  ctx.out << "length=" << s.length() << "\n";
}

// ---- impute-train ---------------------------------------------------------

struct ImputeTrainArgs {
  std::vector<std::string> train;
  std::string pipeline = "gasf";
  double noise_rate = 0.2;
  std::size_t hidden = 500;
  std::size_t batch = 20;
  double lr = 0.1;
  double tol = 0.0;
  std::size_t max_epochs = 5000;
  std::uint64_t seed = 0;
  std::string model_out;
  std::size_t paa = 0;
  std::size_t length = 0;
};

void run_impute_train(const ImputeTrainArgs& a, const Context& ctx) {
  const Pipeline pipeline = parse_pipeline(a.pipeline);
  std::vector<Dataset> parts;
  for (const auto& path : a.train) {
    Dataset d{dataset_name(path), parse_ucr(path), {}};
    validate_uniform(d.train);
    if (a.length) d = resample_dataset(d, a.length);
    parts.push_back(std::move(d));
  }
  const Dataset merged = merge_datasets(parts);

  TrainConfig cfg;
  cfg.batch_size = a.batch;
  cfg.learning_rate = a.lr;
  cfg.tolerance = a.tol > 0.0 ? a.tol : default_tolerance(pipeline);
  cfg.max_epochs = a.max_epochs;
  cfg.on_epoch = [&ctx](std::size_t epoch, double mse) {
    ctx.err << "epoch=" << epoch << " mse=" << format_double(mse) << "\n";
  };
  const std::optional<std::size_t> paa = a.paa ? std::optional(a.paa) : std::nullopt;
  const TrainResult r =
      train_imputer(merged.train, pipeline, a.noise_rate, a.hidden, cfg, a.seed, paa);
  save_model(r.model, a.model_out);

  Manifest manifest = start_manifest(ctx, "impute-train");
  manifest.parameters["pipeline"] = a.pipeline;
  manifest.parameters["noise_rate"] = a.noise_rate;
  manifest.parameters["hidden"] = a.hidden;
  manifest.parameters["batch"] = a.batch;
  manifest.parameters["lr"] = a.lr;
  manifest.parameters["tol"] = cfg.tolerance;
  manifest.parameters["max_epochs"] = a.max_epochs;
  manifest.parameters["seed"] = a.seed;
  manifest.parameters["paa"] = a.paa;
  manifest.parameters["length"] = a.length;
  manifest.parameters["train_series"] = merged.train.size();
  for (const auto& path : a.train) manifest.inputs.push_back(path);
  manifest.outputs.push_back(a.model_out);
  manifest.write(manifest_path_for(a.model_out, false));

  ctx.out << "trained " << a.pipeline << " autoencoder (d=" << r.model.input_dim
          << ", h=" << r.model.hidden_dim << ") on " << merged.train.size() << " series in "
          << r.loss_history.size() << " epochs; training MSE " << human(r.initial_mse) << " -> "
          << human(r.final_mse) << (r.converged ? "" : " (epoch cap reached)") << "\n";
  ctx.out << "epochs=" << r.loss_history.size() << "\nconverged=" << (r.converged ? 1 : 0)
          << "\ninitial_mse=" << format_double(r.initial_mse)
          << "\nfinal_mse=" << format_double(r.final_mse) << "\n";
}

// ---- impute-eval ----------------------------------------------------------

struct ImputeEvalArgs {
  std::string model;
  std::string test;
  std::string pipeline = "gasf";
  double noise_rate = 0.2;
  std::size_t runs = 10;
  std::uint64_t seed = 0;
  std::size_t paa = 0;
  std::string report;
};

void run_impute_eval(const ImputeEvalArgs& a, const Context& ctx) {
  const Pipeline pipeline = parse_pipeline(a.pipeline);
  const DaModel model = load_model(a.model);
  const auto test = parse_ucr(a.test);
  validate_uniform(test);
  if (a.runs < 1) throw Error(ErrorCode::InvalidArgument, "--runs must be >= 1");
  const std::optional<std::size_t> paa = a.paa ? std::optional(a.paa) : std::nullopt;
  std::vector<ScoreEntry> runs;
  for (std::size_t k = 0; k < a.runs; ++k) {
    runs.push_back(evaluate_imputation(model, pipeline, test, a.noise_rate, a.seed + k, paa));
  }
  const ImputationReport report = summarize(std::move(runs));

  std::ostringstream kv;
  kv << "pipeline=" << a.pipeline << "\nruns=" << report.runs
     << "\nfull_mse=" << format_double(report.full_mse)
     << "\nimputation_mse=" << format_double(report.imputation_mse) << "\n";
  for (std::size_t k = 0; k < report.per_run.size(); ++k) {
    kv << "run." << k << ".seed=" << a.seed + k << "\nrun." << k
       << ".full_mse=" << format_double(report.per_run[k].full_mse) << "\nrun." << k
       << ".imputation_mse=" << format_double(report.per_run[k].imputation_mse) << "\n";
  }
  ctx.out << a.pipeline << " imputation on " << test.size() << " series over " << report.runs
          << " runs: full MSE " << human(report.full_mse) << ", imputation MSE "
          << human(report.imputation_mse) << "\n"
          << kv.str();
  if (!a.report.empty()) {
    write_report(a.report, kv.str());
    Manifest manifest = start_manifest(ctx, "impute-eval");
    manifest.parameters["pipeline"] = a.pipeline;
    manifest.parameters["noise_rate"] = a.noise_rate;
    manifest.parameters["runs"] = a.runs;
    manifest.parameters["seed"] = a.seed;
    manifest.parameters["paa"] = a.paa;
    manifest.inputs = {a.model, a.test};
    manifest.outputs.push_back(a.report);
    manifest.write(manifest_path_for(a.report, false));
  }
}

// ---- classify -------------------------------------------------------------

struct ClassifyArgs {
  std::string train;
  std::string test;
  std::string ucr_dir;
  std::vector<std::string> datasets;
  std::vector<std::size_t> sizes{16, 24, 32, 40, 48};
  std::vector<std::size_t> quantiles{8, 16, 32, 64};
  std::string penalties = "1e-4..1e4";
  std::uint64_t seed = 0;
  std::size_t folds = 5;
  std::string rescale = "symmetric";
  std::size_t epochs = 40;
  std::string report;
};

void run_classify(const ClassifyArgs& a, const Context& ctx) {
  std::vector<std::tuple<std::string, fs::path, fs::path>> jobs;
  if (!a.ucr_dir.empty()) {
    if (a.datasets.empty()) throw Error(ErrorCode::InvalidArgument, "--ucr-dir needs --datasets");
    for (const auto& name : a.datasets) {
      jobs.emplace_back(name, find_split(a.ucr_dir, name, "TRAIN"),
                        find_split(a.ucr_dir, name, "TEST"));
    }
  } else {
    if (a.train.empty() || a.test.empty()) {
      throw Error(ErrorCode::InvalidArgument, "classify needs --train and --test, or --ucr-dir");
    }
    jobs.emplace_back(dataset_name(a.train), a.train, a.test);
  }
  SelectionGrid grid;
  grid.sizes = a.sizes;
  grid.quantiles = a.quantiles;
  grid.penalties = parse_penalties(a.penalties);
  const RescaleMode mode = parse_rescale_mode(a.rescale);

  Manifest manifest = start_manifest(ctx, "classify");
  manifest.parameters["sizes"] = grid.sizes;
  manifest.parameters["quantiles"] = grid.quantiles;
  manifest.parameters["penalties"] = grid.penalties;
  manifest.parameters["seed"] = a.seed;
  manifest.parameters["folds"] = a.folds;
  manifest.parameters["rescale"] = a.rescale;
  manifest.parameters["epochs"] = a.epochs;

  std::ostringstream kv;
  ctx.out << "dataset            S    Q          C   cv_error  test_error\n";
  for (const auto& [name, train_path, test_path] : jobs) {
    const auto train = parse_ucr(train_path);
    const auto test = parse_ucr(test_path);
    validate_uniform(train);
    validate_uniform(test);
    const Selection sel = model_select(train, grid, a.seed, mode, a.folds, {a.epochs});
    const double test_error = evaluate(sel.model, test, sel.size, sel.quantiles, mode);
    const std::size_t n = train.front().length();
    const std::size_t m = blur_step(n, sel.size);
    char row[160];
    std::snprintf(row, sizeof row, "%-16s %3zu  %3zu  %9.3g  %9.4f  %10.4f\n", name.c_str(),
                  sel.size, sel.quantiles, sel.penalty, sel.cv_error, test_error);
    ctx.out << row;
    kv << "dataset=" << name << " size=" << sel.size << " quantiles=" << sel.quantiles
       << " penalty=" << format_double(sel.penalty) << " cv_error=" << format_double(sel.cv_error)
       << " test_error=" << format_double(test_error) << " mtf_native_size=" << (n + m - 1) / m
       << " grid_points=" << sel.evaluated.size() << "\n";
    manifest.inputs.push_back(train_path.string());
    manifest.inputs.push_back(test_path.string());
  }
  ctx.out << kv.str();
  if (!a.report.empty()) {
    write_report(a.report, kv.str());
    manifest.outputs.push_back(a.report);
    manifest.write(manifest_path_for(a.report, false));
  }
}

// ---- baseline -------------------------------------------------------------

struct BaselineArgs {
  std::string train;
  std::string test;
  std::string report;
};

void run_baseline(const BaselineArgs& a, const Context& ctx) {
  const auto train = parse_ucr(a.train);
  const auto test = parse_ucr(a.test);
  validate_uniform(train);
  validate_uniform(test);
  const double error = baseline_1nn(train, test);
  std::ostringstream kv;
  kv << "dataset=" << dataset_name(a.train) << " error_1nn=" << format_double(error) << "\n";
  ctx.out << "1NN Euclidean error on " << test.size() << " test series: " << human(error) << "\n"
          << kv.str();
  if (!a.report.empty()) {
    write_report(a.report, kv.str());
    Manifest manifest = start_manifest(ctx, "baseline");
    manifest.inputs = {a.train, a.test};
    manifest.outputs.push_back(a.report);
    manifest.write(manifest_path_for(a.report, false));
  }
}

// ---- synth ----------------------------------------------------------------

struct SynthArgs {
  std::string family = "sin2";
  std::size_t count = 0;
  std::size_t length = 0;
  std::uint64_t seed = 0;
  double noise = 0.1;
  std::string out;
  std::size_t test_count = 0;
  std::string test_out;
};

void run_synth(const SynthArgs& a, const Context& ctx) {
  if (a.test_count > 0 && a.test_out.empty()) {
    throw Error(ErrorCode::InvalidArgument, "--test-count needs --test-out");
  }
  const SyntheticSpec spec{parse_synthetic_family(a.family), a.noise, a.test_count};
  const Dataset d = gen_synthetic(spec, a.count, a.length, a.seed);
  write_ucr(d.train, a.out);
  Manifest manifest = start_manifest(ctx, "synth");
  manifest.parameters["family"] = a.family;
  manifest.parameters["count"] = a.count;
  manifest.parameters["length"] = a.length;
  manifest.parameters["seed"] = a.seed;
  manifest.parameters["noise"] = a.noise;
  manifest.parameters["test_count"] = a.test_count;
  manifest.outputs.push_back(a.out);
  if (a.test_count > 0) {
    write_ucr(d.test, a.test_out);
    manifest.outputs.push_back(a.test_out);
  }
  manifest.write(manifest_path_for(a.out, false));
  ctx.out << "wrote " << d.train.size() << " " << d.name << " series of length " << a.length
          << " to " << a.out << "\n";
  ctx.out << "count=" << d.train.size() << "\ntest_count=" << d.test.size() << "\n";
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             const std::vector<std::string>* recorded);

// ---- replay ---------------------------------------------------------------

// The rerun records the manifest's own argv, so its manifest comes out byte-identical.
int run_replay(const std::string& path, const Context& ctx) {
  json doc;
  try {
    doc = json::parse(read_text_file(path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, path + ": " + e.what());
  }
  if (!doc.contains("argv") || !doc["argv"].is_array()) {
    throw Error(ErrorCode::InvalidArgument, path + ": manifest has no argv");
  }
  const auto recorded = doc["argv"].get<std::vector<std::string>>();
  if (std::find(recorded.begin(), recorded.end(), "replay") != recorded.end()) {
    throw Error(ErrorCode::InvalidArgument, "a manifest cannot replay a replay");
  }
  std::vector<std::string> argv = recorded;
  const bool has_isa = std::find(argv.begin(), argv.end(), "--isa") != argv.end();
  if (!has_isa && doc.contains("parameters") && doc["parameters"].contains("isa")) {
    argv.insert(argv.begin(), {"--isa", doc["parameters"]["isa"].get<std::string>()});
  }
  return dispatch(argv, ctx.out, ctx.err, &recorded);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             const std::vector<std::string>* recorded) {
  CLI::App app{"Time-series imaging: Gramian angular / Markov transition fields, imputation "
               "and classification",
               "tsimg"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string isa = "auto";
  app.add_option("--isa", isa, "Kernel ISA: auto, scalar, avx2, neon")->capture_default_str();
  app.set_version_flag("--version", TSIMG_VERSION);

  EncodeArgs enc;
  auto* encode = app.add_subcommand("encode", "Encode every series of a UCR file as images");
  encode->add_option("--input", enc.input, "UCR file")->required();
  encode->add_option("--encoding", enc.encoding, "gasf, gadf, mtf or compound")
      ->check(CLI::IsMember({"gasf", "gadf", "mtf", "compound"}))
      ->capture_default_str();
  encode->add_option("--rescale", enc.rescale, "unit or symmetric")
      ->check(CLI::IsMember({"unit", "symmetric"}))
      ->capture_default_str();
  encode->add_option("--paa", enc.paa, "PAA size S (default: series length)");
  encode->add_option("--quantiles", enc.quantiles, "MTF quantile bins Q")->capture_default_str();
  encode->add_option("--image-size", enc.image_size, "Output image size S");
  encode->add_option("--out-dir", enc.out_dir, "Output directory")->required();
  encode->add_flag("--png", enc.png, "Also render PNG images");

  DecodeArgs dec;
  auto* decode = app.add_subcommand("decode", "Reconstruct a series from a Unit-mode GASF CSV");
  decode->add_option("--input", dec.input, "GASF matrix CSV")->required();
  decode->add_option("--out", dec.out, "Output UCR-like file")->required();

  ImputeTrainArgs itr;
  auto* itrain = app.add_subcommand("impute-train", "Train a denoising autoencoder imputer");
  itrain->add_option("--train", itr.train, "UCR file (repeatable; files are merged)")->required();
  itrain->add_option("--pipeline", itr.pipeline, "gasf or raw")
      ->check(CLI::IsMember({"gasf", "raw"}))
      ->capture_default_str();
  itrain->add_option("--noise-rate", itr.noise_rate, "Corrupted fraction")->capture_default_str();
  itrain->add_option("--hidden", itr.hidden, "Hidden units")->capture_default_str();
  itrain->add_option("--batch", itr.batch, "Mini-batch size")->capture_default_str();
  itrain->add_option("--lr", itr.lr, "Learning rate")->capture_default_str();
  itrain->add_option("--tol", itr.tol, "Stopping tolerance (default 1e-3 gasf, 1e-5 raw)");
  itrain->add_option("--max-epochs", itr.max_epochs, "Epoch cap")->capture_default_str();
  itrain->add_option("--seed", itr.seed, "Seed")->capture_default_str();
  itrain->add_option("--model-out", itr.model_out, "Model file")->required();
  itrain->add_option("--paa", itr.paa, "PAA-smooth GASF images to S x S");
  itrain->add_option("--length", itr.length, "Resample every series to this length first");

  ImputeEvalArgs iev;
  auto* ieval = app.add_subcommand("impute-eval", "Score an imputer over seeded corruption runs");
  ieval->add_option("--model", iev.model, "Model file")->required();
  ieval->add_option("--test", iev.test, "UCR file")->required();
  ieval->add_option("--pipeline", iev.pipeline, "gasf or raw")
      ->check(CLI::IsMember({"gasf", "raw"}))
      ->capture_default_str();
  ieval->add_option("--noise-rate", iev.noise_rate, "Corrupted fraction")->capture_default_str();
  ieval->add_option("--runs", iev.runs, "Runs; run k corrupts with seed+k")->capture_default_str();
  ieval->add_option("--seed", iev.seed, "Seed")->capture_default_str();
  ieval->add_option("--paa", iev.paa, "PAA size the model was trained with");
  ieval->add_option("--report", iev.report, "Write the key=value report here");

  ClassifyArgs cla;
  auto* classify = app.add_subcommand("classify", "Compound-image classification with model selection");
  classify->add_option("--train", cla.train, "UCR training file");
  classify->add_option("--test", cla.test, "UCR test file");
  classify->add_option("--ucr-dir", cla.ucr_dir, "UCR archive root (with --datasets)");
  classify->add_option("--datasets", cla.datasets, "Dataset names under --ucr-dir")->delimiter(',');
  classify->add_option("--sizes", cla.sizes, "Candidate image sizes S")->delimiter(',')->capture_default_str();
  classify->add_option("--quantiles", cla.quantiles, "Candidate quantile counts Q")->delimiter(',')->capture_default_str();
  classify->add_option("--penalties", cla.penalties, "Penalties C: list or 'lo..hi' decades")->capture_default_str();
  classify->add_option("--seed", cla.seed, "Seed")->capture_default_str();
  classify->add_option("--folds", cla.folds, "Cross-validation folds")->capture_default_str();
  classify->add_option("--rescale", cla.rescale, "unit or symmetric")
      ->check(CLI::IsMember({"unit", "symmetric"}))
      ->capture_default_str();
  classify->add_option("--epochs", cla.epochs, "Classifier training epochs")->capture_default_str();
  classify->add_option("--report", cla.report, "Write the key=value report here");

  BaselineArgs bas;
  auto* baseline = app.add_subcommand("baseline", "1-nearest-neighbour Euclidean baseline");
  baseline->add_option("--train", bas.train, "UCR training file")->required();
  baseline->add_option("--test", bas.test, "UCR test file")->required();
  baseline->add_option("--report", bas.report, "Write the key=value report here");

  SynthArgs syn;
  auto* synth = app.add_subcommand("synth", "Generate a synthetic UCR-format dataset");
  synth->add_option("--family", syn.family, "sin2 or cbf")->capture_default_str();
  synth->add_option("--count", syn.count, "Number of series")->required();
  synth->add_option("--length", syn.length, "Series length")->required();
  synth->add_option("--seed", syn.seed, "Seed")->capture_default_str();
  synth->add_option("--noise", syn.noise, "Sinusoid noise standard deviation")->capture_default_str();
  synth->add_option("--out", syn.out, "Output UCR file")->required();
  synth->add_option("--test-count", syn.test_count, "Extra series drawn after the training pool");
  synth->add_option("--test-out", syn.test_out, "Output file for the extra series");

  std::string manifest;
  auto* replay = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  replay->add_option("manifest", manifest, "Manifest JSON")->required();

  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--isa") {
      ++i;
      continue;
    }
    if (args[i].starts_with("-")) continue;
    bool known = false;
    for (const auto* sub : app.get_subcommands({})) known = known || sub->get_name() == args[i];
    if (!known) {
      err << "error: unknown subcommand '" << args[i] << "'\n\n" << app.help();
      return kExitValidation;
    }
    break;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitValidation;
  }

  try {
    kernels::select(isa == "auto" ? kernels::detect() : kernels::parse_isa(isa));
    const Context ctx{recorded ? *recorded : args, out, err};
    if (*encode) run_encode(enc, ctx);
    if (*decode) run_decode(dec, ctx);
    if (*itrain) run_impute_train(itr, ctx);
    if (*ieval) run_impute_eval(iev, ctx);
    if (*classify) run_classify(cla, ctx);
    if (*baseline) run_baseline(bas, ctx);
    if (*synth) run_synth(syn, ctx);
    if (*replay) return run_replay(manifest, ctx);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::IoFailure ? kExitIo : kExitValidation;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace

std::string manifest_path_for(const std::string& output, bool is_directory) {
  return is_directory ? (fs::path(output) / "manifest.json").string() : output + ".manifest.json";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return dispatch(args, out, err, nullptr);
}

}  // namespace tsimg::cli
