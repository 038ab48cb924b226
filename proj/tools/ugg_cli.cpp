// ugg: build hosts, embed inputs, verify embeddings, enumerate small
// families, run the acceptance suite, render SVG.
//
// Exit codes: 0 ok, 1 validation or universality failure, 2 malformed input,
// 3 size cap exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "ugg/ugg.hpp"

namespace {

enum Exit { kOk = 0, kFailed = 1, kMalformed = 2, kTooLarge = 3 };

int exit_code(ugg::ErrorKind kind) {
  switch (kind) {
    case ugg::ErrorKind::SizeTooLarge: return kTooLarge;
    case ugg::ErrorKind::InternalInvariantBroken:
    case ugg::ErrorKind::NoRealizingPair: return kFailed;
    default: return kMalformed;
  }
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) ugg::detail::fail(ugg::ErrorKind::MalformedInput, "cannot write '" + path + "'");
  return out;
}

int report(const ugg::ValidationReport& r) {
  std::cout << r.summary() << '\n';
  for (const auto& f : r.failures) std::cout << "  " << ugg::to_string(f.kind) << ": " << f.detail << '\n';
  return r.ok() ? kOk : kFailed;
}

ugg::ValidationReport validate_any(const ugg::Host& host, const ugg::InputGraph& input, const ugg::Embedding& phi) {
  const ugg::Graph g = std::holds_alternative<ugg::Forest>(input) ? std::get<ugg::Forest>(input).graph()
                                                                   : std::get<ugg::ChordedCycle>(input).graph();
  return std::visit([&](const auto& h) { return ugg::validate_embedding(h, g, phi); }, host);
}

ugg::Embedding embed_any(const ugg::Host& host, const ugg::InputGraph& input) {
  if (const auto* u = std::get_if<ugg::UniversalGraph>(&host)) {
    const auto* forest = std::get_if<ugg::Forest>(&input);
    if (!forest) ugg::detail::fail(ugg::ErrorKind::MalformedInput, "universal hosts take forest input");
    return ugg::embed_forest(*u, *forest);
  }
  const auto& convex = std::get<ugg::ConvexHost>(host);
  if (convex.kind() == ugg::ConvexKind::caterpillar) {
    const auto* forest = std::get_if<ugg::Forest>(&input);
    if (!forest) ugg::detail::fail(ugg::ErrorKind::MalformedInput, "caterpillar hosts take a tree in forest format");
    return ugg::embed_caterpillar(convex, forest->graph());
  }
  if (convex.kind() == ugg::ConvexKind::twochord) {
    const auto* cycle = std::get_if<ugg::ChordedCycle>(&input);
    if (!cycle) ugg::detail::fail(ugg::ErrorKind::MalformedInput, "twochord hosts take chorded-cycle input");
    return ugg::embed_twochord(convex, *cycle);
  }
  ugg::detail::fail(ugg::ErrorKind::MalformedInput, "no embedding algorithm for host kind " + ugg::to_string(convex.kind()));
}

ugg::HostKind host_kind(const ugg::Host& host) {
  if (std::holds_alternative<ugg::UniversalGraph>(host)) return ugg::HostKind::universal;
  switch (std::get<ugg::ConvexHost>(host).kind()) {
    case ugg::ConvexKind::caterpillar: return ugg::HostKind::caterpillar;
    case ugg::ConvexKind::twochord: return ugg::HostKind::twochord;
    case ugg::ConvexKind::complete: return ugg::HostKind::complete;
    case ugg::ConvexKind::custom: return ugg::HostKind::custom;
  }
  return ugg::HostKind::custom;
}

ugg::Index host_size(const ugg::Host& host) {
  return std::visit([](const auto& h) { return h.size(); }, host);
}

ugg::Vertex input_size(const ugg::InputGraph& input) {
  if (const auto* f = std::get_if<ugg::Forest>(&input)) return f->size();
  return static_cast<ugg::Vertex>(std::get<ugg::ChordedCycle>(input).size());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Universal geometric graphs for forests and convex families"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print this help message and exit");

  std::string kind, out_path, host_path, input_path, embedding_path, what, layout = "schematic";
  long long n = 0;
  long long h = 0;
  bool explicit_edges = false;
  std::optional<int> max_n;
  std::optional<std::uint64_t> seed;

  auto* build = app.add_subcommand("build", "Write a host description");
  build->add_option("--kind", kind, "universal | caterpillar | twochord")
      ->required()
      ->check(CLI::IsMember({"universal", "caterpillar", "twochord"}));
  build->add_option("--n", n, "number of vertices")->required();
  build->add_flag("--explicit", explicit_edges, "also list every edge");
  build->add_option("--out", out_path)->required();

  auto* embed = app.add_subcommand("embed", "Embed an input graph into a host");
  embed->add_option("--host", host_path)->required();
  embed->add_option("--input", input_path)->required();
  embed->add_option("--out", out_path)->required();

  auto* verify = app.add_subcommand("verify", "Validate an embedding; the exit code is the verdict");
  verify->add_option("--host", host_path)->required();
  verify->add_option("--input", input_path)->required();
  verify->add_option("--embedding", embedding_path)->required();

  auto* enumerate = app.add_subcommand("enumerate", "List one member per isomorphism class");
  enumerate->add_option("--what", what, "forests | caterpillars | chorded")
      ->required()
      ->check(CLI::IsMember({"forests", "caterpillars", "chorded"}));
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--h", h, "number of chords (chorded only)");
  enumerate->add_option("--out", out_path)->required();

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_option("--max-n", max_n, "cap the exhaustive sweeps at this n");
  selftest->add_option("--seed", seed, "seed for the random-tree sweep");

  auto* render = app.add_subcommand("render", "Draw a host, optionally with an embedding, as SVG");
  render->add_option("--host", host_path)->required();
  render->add_option("--embedding", embedding_path);
  render->add_option("--input", input_path, "input graph, to draw the embedded edges");
  render->add_option("--layout", layout)->check(CLI::IsMember({"schematic", "exact"}));
  render->add_option("--out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    if (*build) {
      if (n < 1) ugg::detail::fail(ugg::ErrorKind::InvalidSize, "--n must be positive");
      const ugg::Host host = ugg::materialize_host({kind, static_cast<ugg::Index>(n), std::nullopt});
      auto out = open_out(out_path);
      if (!explicit_edges) {
        ugg::write_host(out, kind, n, nullptr);
      } else {
        const auto edges = std::visit([](const auto& g) { return std::vector<ugg::Edge>(g.edges()); }, host);
        ugg::write_host(out, kind, n, &edges);
      }
      std::cout << kind << " host, n=" << n << '\n';
      return kOk;
    }

    if (*embed) {
      const ugg::Host host = ugg::load_host(host_path);
      const ugg::InputGraph input = ugg::load_input(input_path);
      if (input_size(input) != host_size(host))
        ugg::detail::fail(ugg::ErrorKind::SizeMismatch, "input has " + std::to_string(input_size(input)) +
                                                            " vertices, host has " + std::to_string(host_size(host)));
      const ugg::Embedding phi = embed_any(host, input);
      auto out = open_out(out_path);
      ugg::write_embedding(out, phi);
      return report(validate_any(host, input, phi));
    }

    if (*verify) {
      const ugg::Host host = ugg::load_host(host_path);
      const ugg::InputGraph input = ugg::load_input(input_path);
      const ugg::Embedding phi(host_kind(host), host_size(host),
                               ugg::load_embedding(embedding_path, input_size(input)));
      return report(validate_any(host, input, phi));
    }

    if (*enumerate) {
      auto out = open_out(out_path);
      std::size_t count = 0;
      if (what == "forests") {
        for (const ugg::Forest& f : ugg::enumerate_forests(static_cast<ugg::Vertex>(n))) {
          out << "# instance " << count++ << '\n';
          ugg::write_forest(out, f.graph());
        }
      } else if (what == "caterpillars") {
        for (const ugg::Graph& g : ugg::enumerate_caterpillars(static_cast<ugg::Vertex>(n))) {
          out << "# instance " << count++ << '\n';
          ugg::write_forest(out, g);
        }
      } else {
        for (const ugg::ChordedCycle& g : ugg::enumerate_chorded_cycles(n, h)) {
          out << "# instance " << count++ << '\n';
          ugg::write_chorded(out, g);
        }
      }
      std::cout << count << ' ' << what << '\n';
      return kOk;
    }

    if (*selftest) {
      auto options = max_n ? ugg::acceptance::Options::capped(*max_n) : ugg::acceptance::Options{};
      if (seed) options.seed = *seed;
      bool all = true;
      for (const auto& r : ugg::acceptance::run_all(options)) {
        std::cout << ugg::acceptance::format(r) << '\n';
        all = all && r.pass;
      }
      return all ? kOk : kFailed;
    }

    if (*render) {
      const ugg::Host host = ugg::load_host(host_path);
      std::optional<ugg::Overlay> overlay;
      std::optional<ugg::Graph> input_graph;
      if (!input_path.empty()) {
        const ugg::InputGraph input = ugg::load_input(input_path);
        input_graph = std::holds_alternative<ugg::Forest>(input) ? std::get<ugg::Forest>(input).graph()
                                                                   : std::get<ugg::ChordedCycle>(input).graph();
      }
      if (!embedding_path.empty()) {
        const auto size = input_graph ? input_graph->size() : static_cast<ugg::Vertex>(host_size(host));
        overlay = ugg::Overlay{ugg::load_embedding(embedding_path, size), input_graph ? &*input_graph : nullptr};
      }
      const ugg::Overlay* over = overlay ? &*overlay : nullptr;
      std::string doc;
      if (const auto* u = std::get_if<ugg::UniversalGraph>(&host))
        doc = ugg::render_svg(*u, layout == "exact" ? ugg::Layout::exact : ugg::Layout::schematic, over);
      else
        doc = ugg::render_svg(std::get<ugg::ConvexHost>(host), over);
      auto out = open_out(out_path);
      out << doc;
      return kOk;
    }
  } catch (const ugg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMalformed;
  }
  return kOk;
}
