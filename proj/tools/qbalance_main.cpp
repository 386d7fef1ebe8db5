#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qbalance/analysis.hpp"
#include "qbalance/codec.hpp"
#include "qbalance/graycode.hpp"
#include "qbalance/params.hpp"
#include "qbalance/sequence.hpp"
#include "qbalance/version.hpp"
#include "qbalance/walk.hpp"

namespace qb = qbalance;

namespace {

// One word from --word, otherwise one word per line from --in or stdin.
// Output order follows input order.
void for_each_word(const std::string& word, const std::string& inPath,
                   const std::function<void(const std::string&)>& fn) {
  if (!word.empty()) {
    fn(word);
    return;
  }
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!inPath.empty()) {
    file.open(inPath);
    if (!file) throw qb::ParameterError("cannot open " + inPath);
    in = &file;
  }
  std::string line;
  while (std::getline(*in, line)) {
    while (!line.empty() &&
           (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    std::size_t start = 0;
    while (start < line.size() && (line[start] == ' ' || line[start] == '\t')) {
      ++start;
    }
    if (start < line.size()) fn(line.substr(start));
  }
}

void print_encode_trace(const qb::Params& params, const qb::EncodingRow& row) {
  const qb::BalancingIndex idx =
      qb::balancing_index(params.q, params.k, row.z);
  std::cerr << "z=" << row.z << " zprime=" << row.zPrime << " s=" << idx.s
            << " p=" << idx.p << " b=" << row.b.str() << " y=" << row.y.str()
            << " g=" << row.g.str() << " u=" << static_cast<int>(row.u)
            << "\n";
}

void print_decode_trace(const qb::DecodeTrace& trace) {
  std::cerr << "u=" << static_cast<int>(trace.parts.u)
            << " g=" << trace.prefix.g.str() << " d=" << trace.prefix.d.str()
            << " zprime=" << trace.prefix.zPrime << " z=" << trace.prefix.z
            << " s=" << trace.prefix.s << " p=" << trace.prefix.p
            << " b=" << trace.prefix.b.str()
            << " y=" << trace.parts.payload.str() << " w=" << trace.weight
            << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"balanced coding of fixed-alphabet words with rank prefixes"};
  app.set_version_flag("--version",
                       std::string("qbalance ") + std::string(qb::kVersion));
  app.require_subcommand(1);

  int q = 0;
  long long k = 0;
  int rPrime = 0;
  int rMax = 0;
  std::string word;
  std::string inPath;
  bool trace = false;
  bool strict = false;

  auto add_q = [&q](CLI::App* cmd) {
    cmd->add_option("-q,--q", q, "alphabet size")->required();
  };
  auto add_k = [&k](CLI::App* cmd) {
    cmd->add_option("-k,--k", k, "information word length")->required();
  };
  auto add_words = [&word, &inPath](CLI::App* cmd) {
    cmd->add_option("-w,--word", word, "single input word");
    cmd->add_option("-i,--in", inPath, "file with one word per line");
  };

  CLI::App* encode = app.add_subcommand(
      "encode", "map information words to balanced codewords");
  add_q(encode);
  add_k(encode);
  add_words(encode);
  encode->add_flag("--trace", trace, "derivation details on stderr");

  CLI::App* decode =
      app.add_subcommand("decode", "recover information words from codewords");
  add_q(decode);
  add_k(decode);
  add_words(decode);
  decode->add_flag("--trace", trace, "derivation details on stderr");
  decode->add_flag("--strict", strict, "reject codewords off the target weight");

  CLI::App* gray =
      app.add_subcommand("gray", "print the rank/digits/codeword table (TSV)");
  add_q(gray);
  gray->add_option("-r,--rprime", rPrime, "prefix length")->required();

  CLI::App* walk = app.add_subcommand(
      "walk", "weight walk as CSV, over candidates (--word) or ranks (--rprime)");
  add_q(walk);
  CLI::Option* walkWord = walk->add_option("-w,--word", word, "payload word");
  walk->add_option("-r,--rprime", rPrime, "prefix length")->excludes(walkWord);

  CLI::App* subset =
      app.add_subcommand("subset", "print the prefix rank window (TSV)");
  add_q(subset);
  add_k(subset);

  CLI::App* table = app.add_subcommand(
      "table", "print all candidate encodings of one word (TSV)");
  add_q(table);
  add_k(table);
  table->add_option("-w,--word", word, "input word")->required();

  CLI::App* compare = app.add_subcommand(
      "compare", "tabulate kmax per scheme and redundancy (CSV)");
  add_q(compare);
  compare->add_option("-r,--rmax", rMax, "largest redundancy")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (encode->parsed()) {
      const qb::Params params = qb::make_params(q, k);
      for_each_word(word, inPath, [&](const std::string& text) {
        const qb::EncodingRow row =
            qb::encode_row(params, qb::Sequence::parse(text, q));
        if (trace) print_encode_trace(params, row);
        std::cout << qb::Codeword{row.u, row.g, row.y}.flatten().str() << "\n";
      });
    } else if (decode->parsed()) {
      const qb::Params params = qb::make_params(q, k);
      for_each_word(word, inPath, [&](const std::string& text) {
        const qb::DecodeTrace result =
            qb::decode_trace(params, qb::Sequence::parse(text, q));
        if (trace) print_decode_trace(result);
        if (strict && !result.balanced) {
          throw qb::NotBalanced("weight " + std::to_string(result.weight) +
                                " differs from " +
                                std::to_string(params.betaN));
        }
        std::cout << result.x.str() << "\n";
      });
    } else if (gray->parsed()) {
      qb::write_gray_table(std::cout, q, rPrime);
    } else if (walk->parsed()) {
      if (word.empty() && rPrime == 0) {
        throw qb::ParameterError("walk needs --word or --rprime");
      }
      const qb::WalkTrace result =
          word.empty() ? qb::gray_walk(q, rPrime)
                       : qb::walk_trace(qb::Sequence::parse(word, q));
      result.write_csv(std::cout);
    } else if (subset->parsed()) {
      const int prefixLength = qb::ceil_log(q, k) + 1;
      const qb::SubsetSpec spec = qb::select_subset(q, k, prefixLength);
      const qb::Rational betaR(
          static_cast<std::int64_t>(prefixLength) * (q - 1), 2);
      std::cout << "z1\tz2\tkq\tmean\tbeta\n";
      std::cout << spec.z1 << '\t' << spec.z2 << '\t' << k * q << '\t'
                << qb::to_string(spec.meanWeight) << '\t'
                << qb::to_string(betaR) << "\n";
    } else if (table->parsed()) {
      const qb::Params params = qb::make_params(q, k);
      qb::write_encoding_table(std::cout, params,
                               qb::Sequence::parse(word, q));
    } else if (compare->parsed()) {
      qb::write_compare_csv(std::cout, q, rMax);
    }
    return 0;
  } catch (const qb::ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
