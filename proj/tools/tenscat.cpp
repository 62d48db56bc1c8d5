// Command-line surface for the tensor-category calculator: every subcommand
// parses its literals, runs one library operation, and prints either a text
// table or a QueryResult JSON document with deterministic ordering.

#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tenscat/cache.hpp"
#include "tenscat/category.hpp"
#include "tenscat/errors.hpp"
#include "tenscat/homdiag.hpp"
#include "tenscat/io.hpp"
#include "tenscat/lrcalc.hpp"
#include "tenscat/version.hpp"
#include "tenscat/weightcalc.hpp"
#include "tenscat/young.hpp"

namespace {

using nlohmann::json;
using namespace tenscat;

struct Output {
  std::string command;
  std::string kind;
  json input;
  json payload;
  std::string text;
};

Output integer_output(std::string command, json input, std::int64_t value) {
  Output out;
  out.command = std::move(command);
  out.kind = "integer";
  out.input = std::move(input);
  out.payload = value;
  out.text = std::to_string(value) + "\n";
  return out;
}

void render(const Output& out, bool as_json) {
  if (!as_json) {
    std::cout << out.text;
    return;
  }
  const json doc = {{"kind", out.kind},
                    {"meta",
                     {{"command", out.command},
                      {"input", out.input},
                      {"version", kVersion}}},
                    {"payload", out.payload}};
  std::cout << doc.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tenscat: radical filtrations, Ext dimensions, Hom-space bases and "
               "weight multiplicities over a Littlewood-Richardson kernel"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("tenscat ") + kVersion);

  bool as_json = false;
  app.add_flag("--json", as_json, "emit a QueryResult JSON document instead of text");
  std::string cache_path;
  app.add_option("--cache", cache_path,
                 "LR coefficient cache file (also via TENSCAT_CACHE)")
      ->envname("TENSCAT_CACHE");

  std::function<Output()> run;

  // lr
  {
    auto* sub = app.add_subcommand("lr", "one Littlewood-Richardson coefficient");
    sub->fallthrough();
    auto outer = std::make_shared<std::string>();
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    auto bound = std::make_shared<int>(kMaxLrBoxes);
    sub->add_option("--outer", *outer, "outer diagram (lambda)")->required();
    sub->add_option("--a", *a, "first factor diagram")->required();
    sub->add_option("--b", *b, "second factor diagram")->required();
    sub->add_option("--max-size", *bound, "box bound on the outer diagram");
    sub->callback([=, &run] {
      run = [=] {
        const std::int64_t v = lr_coeff(parse_diagram(*outer), parse_diagram(*a),
                                        parse_diagram(*b), *bound);
        return integer_output("lr", {{"outer", *outer}, {"a", *a}, {"b", *b}}, v);
      };
    });
  }

  // lr-expand
  {
    auto* sub = app.add_subcommand("lr-expand", "Schur expansion of s_a * s_b via the LR kernel");
    sub->fallthrough();
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    auto bound = std::make_shared<int>(kMaxLrBoxes);
    sub->add_option("--a", *a, "first factor diagram")->required();
    sub->add_option("--b", *b, "second factor diagram")->required();
    sub->add_option("--max-size", *bound, "box bound on |a| + |b|");
    sub->callback([=, &run] {
      run = [=] {
        const auto exp = lr_expand_pair(parse_diagram(*a), parse_diagram(*b), *bound);
        Output out;
        out.command = "lr-expand";
        out.kind = "expansion";
        out.input = {{"a", *a}, {"b", *b}};
        out.payload = expansion_to_json(exp);
        out.text = expansion_to_text(exp);
        return out;
      };
    });
  }

  // schur-prod
  {
    auto* sub = app.add_subcommand(
        "schur-prod", "Schur expansion of s_a * s_b via the symmetric-polynomial oracle");
    sub->fallthrough();
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    auto vars = std::make_shared<int>(0);
    auto bound = std::make_shared<int>(kMaxOracleBoxes);
    sub->add_option("--a", *a, "first factor diagram")->required();
    sub->add_option("--b", *b, "second factor diagram")->required();
    sub->add_option("--vars", *vars, "number of variables (default |a| + |b|)");
    sub->add_option("--max-size", *bound, "oracle box bound");
    sub->callback([=, &run] {
      run = [=] {
        const YoungDiagram da = parse_diagram(*a);
        const YoungDiagram db = parse_diagram(*b);
        const int k = *vars > 0 ? *vars : da.size() + db.size();
        const auto exp = schur_product_expand(da, db, k, *bound);
        Output out;
        out.command = "schur-prod";
        out.kind = "expansion";
        out.input = {{"a", *a}, {"b", *b}, {"vars", k}};
        out.payload = expansion_to_json(exp);
        out.text = expansion_to_text(exp);
        return out;
      };
    });
  }

  // radical
  {
    auto* sub = app.add_subcommand("radical", "radical filtration layers of a projective");
    sub->fallthrough();
    auto lam = std::make_shared<std::string>();
    auto mu = std::make_shared<std::string>();
    auto bound = std::make_shared<int>(kMaxLrBoxes);
    sub->add_option("--lambda", *lam, "lambda diagram")->required();
    sub->add_option("--mu", *mu, "mu diagram")->required();
    sub->add_option("--max-size", *bound, "box bound per diagram");
    sub->callback([=, &run] {
      run = [=] {
        const auto layers = radical_layers(parse_diagram(*lam), parse_diagram(*mu), *bound);
        Output out;
        out.command = "radical";
        out.kind = "layers";
        out.input = {{"lambda", *lam}, {"mu", *mu}};
        out.payload = layers_to_json(layers);
        out.text = layers_to_text(layers);
        return out;
      };
    });
  }

  // ext
  {
    auto* sub = app.add_subcommand("ext", "dim Ext^i between two simple objects");
    sub->fallthrough();
    auto src = std::make_shared<std::string>();
    auto tgt = std::make_shared<std::string>();
    auto degree = std::make_shared<int>(0);
    auto bound = std::make_shared<int>(kMaxLrBoxes);
    sub->add_option("--src", *src, "source label")->required();
    sub->add_option("--tgt", *tgt, "target label")->required();
    sub->add_option("--i", *degree, "homological degree")->required();
    sub->add_option("--max-size", *bound, "box bound per diagram");
    sub->callback([=, &run] {
      run = [=] {
        const std::int64_t v =
            ext_dim(parse_label(*src), parse_label(*tgt), *degree, *bound);
        return integer_output("ext", {{"src", *src}, {"tgt", *tgt}, {"i", *degree}}, v);
      };
    });
  }

  // ext-table
  {
    auto* sub = app.add_subcommand(
        "ext-table", "all nonzero Ext dimensions between labels up to a box bound");
    sub->fallthrough();
    auto max_boxes = std::make_shared<int>(0);
    auto bound = std::make_shared<int>(kMaxLrBoxes);
    auto serial = std::make_shared<bool>(false);
    sub->add_option("--max-boxes", *max_boxes, "box bound per label diagram")->required();
    sub->add_option("--max-size", *bound, "LR box bound");
    sub->add_flag("--serial", *serial, "use the serial reference kernel");
    sub->callback([=, &run] {
      run = [=] {
        const auto entries =
            *serial ? ext_table_serial(*max_boxes, *bound) : ext_table(*max_boxes, *bound);
        Output out;
        out.command = "ext-table";
        out.kind = "expansion";
        out.input = {{"max-boxes", *max_boxes}};
        out.payload = ext_table_to_json(entries);
        out.text = ext_table_to_text(entries);
        return out;
      };
    });
  }

  // jh-projective
  {
    auto* sub = app.add_subcommand("jh-projective",
                                   "Jordan-Hoelder multiset of a projective");
    sub->fallthrough();
    auto lam = std::make_shared<std::string>();
    auto mu = std::make_shared<std::string>();
    auto bound = std::make_shared<int>(kMaxLrBoxes);
    sub->add_option("--lambda", *lam, "lambda diagram")->required();
    sub->add_option("--mu", *mu, "mu diagram")->required();
    sub->add_option("--max-size", *bound, "box bound per diagram");
    sub->callback([=, &run] {
      run = [=] {
        const auto ms = jh_projective(parse_diagram(*lam), parse_diagram(*mu), *bound);
        Output out;
        out.command = "jh-projective";
        out.kind = "multiset";
        out.input = {{"lambda", *lam}, {"mu", *mu}};
        out.payload = multiset_to_json(ms);
        out.text = multiset_to_text(ms);
        return out;
      };
    });
  }

  // jh-mixed
  {
    auto* sub = app.add_subcommand(
        "jh-mixed", "Jordan-Hoelder multiset of the mixed tensor with p upper, q lower slots");
    sub->fallthrough();
    auto p = std::make_shared<int>(0);
    auto q = std::make_shared<int>(0);
    auto bound = std::make_shared<int>(kMaxMixedTensorDegree);
    auto serial = std::make_shared<bool>(false);
    sub->add_option("--p", *p, "covariant tensor degree")->required();
    sub->add_option("--q", *q, "contravariant tensor degree")->required();
    sub->add_option("--max-degree", *bound, "degree bound");
    sub->add_flag("--serial", *serial, "use the serial reference kernel");
    sub->callback([=, &run] {
      run = [=] {
        const auto ms = *serial ? jh_mixed_tensor_serial(*p, *q, *bound)
                                : jh_mixed_tensor(*p, *q, *bound);
        Output out;
        out.command = "jh-mixed";
        out.kind = "multiset";
        out.input = {{"p", *p}, {"q", *q}};
        out.payload = multiset_to_json(ms);
        out.text = multiset_to_text(ms);
        return out;
      };
    });
  }

  // tensor-proj
  {
    auto* sub = app.add_subcommand("tensor-proj",
                                   "decomposition of a tensor product of two projectives");
    sub->fallthrough();
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    auto bound = std::make_shared<int>(kMaxLrBoxes);
    sub->add_option("--a", *a, "first label")->required();
    sub->add_option("--b", *b, "second label")->required();
    sub->add_option("--max-size", *bound, "box bound on the combined sizes");
    sub->callback([=, &run] {
      run = [=] {
        const auto ms = tensor_projectives(parse_label(*a), parse_label(*b), *bound);
        Output out;
        out.command = "tensor-proj";
        out.kind = "multiset";
        out.input = {{"a", *a}, {"b", *b}};
        out.payload = multiset_to_json(ms);
        out.text = multiset_to_text(ms);
        return out;
      };
    });
  }

  // dual
  {
    auto* sub = app.add_subcommand("dual", "dual of a simple label");
    sub->fallthrough();
    auto label = std::make_shared<std::string>();
    sub->add_option("--label", *label, "label literal")->required();
    sub->callback([=, &run] {
      run = [=] {
        const SimpleLabel d = dual_label(parse_label(*label));
        Output out;
        out.command = "dual";
        out.kind = "multiset";
        out.input = {{"label", *label}};
        out.payload = multiset_to_json({{d, 1}});
        out.text = format_label(d) + "\n";
        return out;
      };
    });
  }

  // hom-dim
  {
    auto* sub = app.add_subcommand("hom-dim", "dimension of Hom between mixed tensors");
    sub->fallthrough();
    auto src = std::make_shared<std::string>();
    auto tgt = std::make_shared<std::string>();
    auto bound = std::make_shared<int>(kMaxHomSlots);
    sub->add_option("--src", *src, "source shape p,q")->required();
    sub->add_option("--tgt", *tgt, "target shape p,q")->required();
    sub->add_option("--max-slots", *bound, "slot bound");
    sub->callback([=, &run] {
      run = [=] {
        const std::int64_t v = hom_dim(parse_shape(*src), parse_shape(*tgt), *bound);
        return integer_output("hom-dim", {{"src", *src}, {"tgt", *tgt}}, v);
      };
    });
  }

  // hom-basis
  {
    auto* sub = app.add_subcommand("hom-basis",
                                   "contraction-diagram basis of Hom between mixed tensors");
    sub->fallthrough();
    auto src = std::make_shared<std::string>();
    auto tgt = std::make_shared<std::string>();
    auto bound = std::make_shared<int>(kMaxHomSlots);
    sub->add_option("--src", *src, "source shape p,q")->required();
    sub->add_option("--tgt", *tgt, "target shape p,q")->required();
    sub->add_option("--max-slots", *bound, "slot bound");
    sub->callback([=, &run] {
      run = [=] {
        const auto basis = enumerate_basis(parse_shape(*src), parse_shape(*tgt), *bound);
        Output out;
        out.command = "hom-basis";
        out.kind = "diagramlist";
        out.input = {{"src", *src}, {"tgt", *tgt}};
        out.payload = json::array();
        for (const ContractionDiagram& d : basis) {
          const json j = diagram_to_json(d);
          out.payload.push_back(j);
          out.text += j.dump() + "\n";
        }
        return out;
      };
    });
  }

  // weight-mult
  {
    auto* sub = app.add_subcommand("weight-mult",
                                   "multiplicity of one weight in a truncated mixed tensor");
    sub->fallthrough();
    auto p = std::make_shared<int>(0);
    auto q = std::make_shared<int>(0);
    auto ti = std::make_shared<int>(0);
    auto tj = std::make_shared<int>(0);
    auto chi = std::make_shared<std::string>();
    auto max_degree = std::make_shared<int>(kMaxWeightDegree);
    auto max_trunc = std::make_shared<int>(kMaxWeightTrunc);
    sub->add_option("--p", *p, "covariant degree")->required();
    sub->add_option("--q", *q, "contravariant degree")->required();
    sub->add_option("--i", *ti, "covariant truncation")->required();
    sub->add_option("--j", *tj, "contravariant truncation")->required();
    sub->add_option("--chi", *chi, "weight literal (empty string for zero)")->required();
    sub->add_option("--max-degree", *max_degree, "degree bound");
    sub->add_option("--max-trunc", *max_trunc, "truncation bound");
    sub->callback([=, &run] {
      run = [=] {
        const std::int64_t v = weight_multiplicity(*p, *q, *ti, *tj, parse_weight(*chi),
                                                   *max_degree, *max_trunc);
        return integer_output(
            "weight-mult",
            {{"p", *p}, {"q", *q}, {"i", *ti}, {"j", *tj}, {"chi", *chi}}, v);
      };
    });
  }

  // weight-enum
  {
    auto* sub = app.add_subcommand("weight-enum",
                                   "full weight multiplicity map of a truncated mixed tensor");
    sub->fallthrough();
    auto p = std::make_shared<int>(0);
    auto q = std::make_shared<int>(0);
    auto ti = std::make_shared<int>(0);
    auto tj = std::make_shared<int>(0);
    auto max_degree = std::make_shared<int>(kMaxWeightDegree);
    auto max_trunc = std::make_shared<int>(kMaxWeightTrunc);
    sub->add_option("--p", *p, "covariant degree")->required();
    sub->add_option("--q", *q, "contravariant degree")->required();
    sub->add_option("--i", *ti, "covariant truncation")->required();
    sub->add_option("--j", *tj, "contravariant truncation")->required();
    sub->add_option("--max-degree", *max_degree, "degree bound");
    sub->add_option("--max-trunc", *max_trunc, "truncation bound");
    sub->callback([=, &run] {
      run = [=] {
        const auto wm = enumerate_weights(*p, *q, *ti, *tj, *max_degree, *max_trunc);
        Output out;
        out.command = "weight-enum";
        out.kind = "weightmap";
        out.input = {{"p", *p}, {"q", *q}, {"i", *ti}, {"j", *tj}};
        out.payload = weightmap_to_json(wm);
        out.text = weightmap_to_text(wm);
        return out;
      };
    });
  }

  // syt
  {
    auto* sub = app.add_subcommand("syt", "number of standard Young tableaux of a shape");
    sub->fallthrough();
    auto diagram = std::make_shared<std::string>();
    auto bound = std::make_shared<int>(kMaxSytBoxes);
    sub->add_option("--diagram", *diagram, "diagram literal")->required();
    sub->add_option("--max-size", *bound, "box bound");
    sub->callback([=, &run] {
      run = [=] {
        const std::int64_t v = syt_count(parse_diagram(*diagram), *bound);
        return integer_output("syt", {{"diagram", *diagram}}, v);
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help() << std::flush;
    return 2;
  }

  try {
    if (!cache_path.empty()) {
      std::string warn;
      load_lr_cache(cache_path, &warn);
      if (!warn.empty()) std::cerr << "warning: " << warn << "\n";
    }
    const Output out = run();
    render(out, as_json);
    if (!cache_path.empty()) {
      std::string warn;
      store_lr_cache(cache_path, &warn);
      if (!warn.empty()) std::cerr << "warning: " << warn << "\n";
    }
  } catch (const ParseError& e) {
    std::cerr << caret_message(e) << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
