#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "vob/analytics.hpp"
#include "vob/conversion.hpp"
#include "vob/core.hpp"
#include "vob/generators.hpp"
#include "vob/imgio.hpp"
#include "vob/oracle.hpp"

namespace {

vob::Metric parse_metric(const std::string& name) {
    if (name == "taxicab") return vob::Metric::Taxicab;
    if (name == "euclidean") return vob::Metric::Euclidean;
    throw CLI::ValidationError("--metric", "must be 'taxicab' or 'euclidean'");
}

// Data goes to the named file, or to standard output for "-".
void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw vob::IoError("cannot open file for writing: " + path);
    out << text;
    if (!out) throw vob::IoError("write failed: " + path);
}

void write_vob(const vob::BifiltrationResult& result, const std::string& path) {
    if (path == "-") {
        vob::write_entrance_sets(result, std::cout);
        return;
    }
    vob::write_entrance_sets(result, path);
}

int run(int argc, char** argv) {
    CLI::App app{"value-offset bifiltration toolkit"};
    app.require_subcommand(1);

    std::string metric_name = "taxicab";
    std::string input_path, output_path;

    CLI::App* compute = app.add_subcommand("compute", "compute entrance sets for an image");
    compute->add_option("--metric", metric_name, "taxicab or euclidean")->required();
    compute->add_option("--input", input_path, "input image (PGM or grayscale PNG)")->required();
    compute->add_option("--output", output_path, "output VOB file, '-' for stdout")->required();

    long long max_pixels = 4096;
    CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force entrance sets (small images)");
    oracle_cmd->add_option("--metric", metric_name, "taxicab or euclidean")->required();
    oracle_cmd->add_option("--input", input_path, "input image")->required();
    oracle_cmd->add_option("--output", output_path, "output VOB file, '-' for stdout")->required();
    oracle_cmd->add_option("--max-pixels", max_pixels, "refuse larger images (quadratic cost)")
        ->envname("VOB_MAX_ORACLE_PIXELS")
        ->capture_default_str();

    std::string kind = "random";
    int gen_width = 0, gen_height = 0, gen_values = 0;
    std::uint64_t seed = 0;
    CLI::App* gen = app.add_subcommand("gen", "generate a synthetic image as PGM");
    gen->add_option("--kind", kind, "random, centralized, or diagonal")->required();
    gen->add_option("--width", gen_width, "image width")->required();
    gen->add_option("--height", gen_height, "image height")->required();
    gen->add_option("--values", gen_values, "number of gray values")->required();
    gen->add_option("--seed", seed, "random seed")->capture_default_str();
    gen->add_option("--output", output_path, "output PGM path")->required();

    std::string stats_path;
    CLI::App* stats = app.add_subcommand("stats", "entrance-set statistics of a VOB file");
    stats->add_option("vob", stats_path, "VOB file")->required();

    std::string cmp_a, cmp_b;
    CLI::App* cmp = app.add_subcommand("compare", "per-value offset comparison of two VOB files");
    cmp->add_option("a", cmp_a, "VOB file")->required();
    cmp->add_option("b", cmp_b, "reference VOB file")->required();

    std::vector<int> sizes;
    int bench_values = 256, reps = 1;
    CLI::App* bench = app.add_subcommand("bench", "time compute on random images, emit CSV");
    bench->add_option("--sizes", sizes, "square image sizes")->required()->delimiter(',');
    bench->add_option("--values", bench_values, "number of gray values")->capture_default_str();
    bench->add_option("--metric", metric_name, "taxicab or euclidean")->capture_default_str();
    bench->add_option("--reps", reps, "repetitions per size (minimum is reported)")
        ->capture_default_str();
    bench->add_option("--seed", seed, "random seed")->capture_default_str();
    bench->add_option("--output", output_path, "output CSV path, '-' for stdout")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the diagnostic and usage
        return 2;
    }

    if (compute->parsed() || oracle_cmd->parsed()) {
        const vob::Metric metric = parse_metric(metric_name);
        const vob::GrayImage img = vob::load_image(input_path);
        if (oracle_cmd->parsed() && img.pixel_count() > max_pixels) {
            std::cerr << "error: image has " << img.pixel_count()
                      << " pixels, above the oracle guard of " << max_pixels
                      << " (raise --max-pixels or VOB_MAX_ORACLE_PIXELS)\n";
            return 1;
        }
        const auto start = std::chrono::steady_clock::now();
        vob::BifiltrationResult result = compute->parsed()
                                             ? vob::compute_bifiltration(img, metric)
                                             : vob::oracle_bifiltration(img, metric);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        write_vob(result, output_path);
        std::cerr << "pixels " << img.pixel_count() << " values " << result.value_set.size()
                  << " bigrades " << result.total_bigrades() << " seconds " << elapsed.count()
                  << '\n';
        return 0;
    }
    if (gen->parsed()) {
        vob::GrayImage img = [&] {
            if (kind == "random") return vob::gen_random(gen_width, gen_height, gen_values, seed);
            if (kind == "centralized") return vob::gen_centralized(gen_width, gen_height, gen_values);
            if (kind == "diagonal") return vob::gen_diagonal(gen_width, gen_height, gen_values);
            throw CLI::ValidationError("--kind", "must be random, centralized, or diagonal");
        }();
        vob::save_pgm(img, output_path);
        return 0;
    }
    if (stats->parsed()) {
        vob::BifiltrationResult result = vob::read_entrance_sets(stats_path);
        vob::print_stats(vob::entrance_stats(result), std::cout);
        return 0;
    }
    if (cmp->parsed()) {
        vob::BifiltrationResult a = vob::read_entrance_sets(cmp_a);
        vob::BifiltrationResult b = vob::read_entrance_sets(cmp_b);
        vob::print_diff(vob::compare(a, b), std::cout);
        return 0;
    }
    if (bench->parsed()) {
        vob::BenchConfig config;
        config.sizes = sizes;
        config.num_values = bench_values;
        config.metric = parse_metric(metric_name);
        config.repetitions = reps;
        config.seed = seed;
        std::vector<vob::BenchRow> rows = vob::bench_run(config);
        write_text(output_path, vob::bench_csv(rows));
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
