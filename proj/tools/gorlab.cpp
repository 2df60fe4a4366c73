/* Command-line workbench: semigroup arithmetic, presentation and
 * grading verification, series transforms, the Lie superalgebra
 * calculator, monomial-algebra series, and the end-to-end verify-all
 * pipeline. Reports are plain text or JSON (--json). */

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <gorlab/grading.hpp>
#include <gorlab/lie/engine.hpp>
#include <gorlab/lie/lambda_table.hpp>
#include <gorlab/monomial.hpp>
#include <gorlab/presentation.hpp>
#include <gorlab/relations.hpp>
#include <gorlab/semigroup.hpp>
#include <gorlab/series.hpp>
#include <gorlab/verify.hpp>

using json = nlohmann::json;
using namespace gorlab;

namespace {

std::string slurp(const std::string& path)
{
	std::ifstream f(path);
	if (!f) throw std::runtime_error("cannot open " + path);
	std::stringstream ss;
	ss << f.rdbuf();
	return ss.str();
}

std::vector<long> parse_longs(const std::string& csv)
{
	std::vector<long> out;
	std::stringstream ss(csv);
	std::string tok;
	while (std::getline(ss, tok, ','))
		if (!tok.empty()) out.push_back(std::stol(tok));
	return out;
}

std::vector<std::string> split_csv(const std::string& csv)
{
	std::vector<std::string> out;
	std::stringstream ss(csv);
	std::string tok;
	while (std::getline(ss, tok, ','))
		if (!tok.empty()) out.push_back(tok);
	return out;
}

/* Splits at top-level commas only ('[' nests), for lists of lie[..]. */
std::vector<std::string> split_exprs(const std::string& s)
{
	std::vector<std::string> out;
	std::string cur;
	int depth = 0;
	for (char c : s) {
		if (c == '[') ++depth;
		if (c == ']') --depth;
		if (c == ',' && depth == 0) {
			if (!cur.empty()) out.push_back(cur);
			cur.clear();
		} else {
			cur += c;
		}
	}
	if (!cur.empty()) out.push_back(cur);
	return out;
}

json coeffs_json(const UniSeries& s)
{
	json a = json::array();
	for (int k = 0; k <= s.trunc(); ++k) a.push_back(s[k].get_str());
	return a;
}

json coeffs_json(const BiSeries& s)
{
	json a = json::array();
	for (int i = 0; i <= s.nx(); ++i) {
		json row = json::array();
		for (int j = 0; j <= s.ny(); ++j) row.push_back(s.at(i, j).get_str());
		a.push_back(row);
	}
	return a;
}

/* Per-module results are JSON either way; --json additionally switches
 * the verify-all report format. */
void emit(const json& j, bool) { std::cout << j.dump(2) << "\n"; }

/* key=value configuration file plus GORLAB_* environment overrides. */
void load_config(PipelineConfig& cfg, const std::string& path)
{
	auto apply = [&](const std::string& key, const std::string& val) {
		if (key == "data_dir") cfg.data_dir = val;
		else if (key == "presentation_max_degree") cfg.presentation_max_degree = std::stol(val);
		else if (key == "lie_cap") cfg.lie_cap = std::stoi(val);
		else if (key == "uni_trunc") cfg.uni_trunc = std::stoi(val);
		else if (key == "nx") cfg.nx = std::stoi(val);
		else if (key == "ny") cfg.ny = std::stoi(val);
		else if (key == "prime_field") cfg.prime_field = (val == "1" || val == "true");
		else throw std::runtime_error("unknown config key " + key);
	};
	if (!path.empty()) {
		std::ifstream f(path);
		if (!f) throw std::runtime_error("cannot open config " + path);
		std::string line;
		while (std::getline(f, line)) {
			if (line.empty() || line[0] == '#') continue;
			size_t eq = line.find('=');
			if (eq == std::string::npos) continue;
			apply(line.substr(0, eq), line.substr(eq + 1));
		}
	}
	const std::pair<const char*, const char*> env_keys[] = {
	    {"GORLAB_DATA_DIR", "data_dir"},
	    {"GORLAB_PRESENTATION_MAX_DEGREE", "presentation_max_degree"},
	    {"GORLAB_LIE_CAP", "lie_cap"},
	    {"GORLAB_UNI_TRUNC", "uni_trunc"},
	    {"GORLAB_NX", "nx"},
	    {"GORLAB_NY", "ny"},
	    {"GORLAB_PRIME_FIELD", "prime_field"},
	};
	for (auto& [env, key] : env_keys)
		if (const char* v = std::getenv(env)) apply(key, v);
}

template <class F>
int lie_command(const std::string& sub, const std::string& file, const std::string& gens_arg,
                const std::string& x_arg, const std::string& y_arg, int maxdeg, int degree,
                int deg_t, int deg_s, bool as_json)
{
	auto pres = parse_lie_presentation(slurp(file));
	LieEngineOptions opt;
	opt.degree_cap = std::max({maxdeg, degree, deg_s + deg_t, 2});
	opt.assoc_degree_cap = opt.degree_cap;
	LieEngine<F> eng(pres, opt);
	using El = typename LieEngine<F>::Element;

	/* Elements are lie expressions or modbas[d,i] labels. */
	auto element = [&](const std::string& s) -> El {
		size_t p = s.find("modbas[");
		if (p != std::string::npos) {
			int d = 0, i = 0;
			if (std::sscanf(s.c_str() + p, "modbas[%d,%d]", &d, &i) != 2 || i < 1)
				throw std::runtime_error("bad modbas label " + s);
			eng.ensure_degree(d);
			return eng.element_of_basis(d, i - 1);
		}
		return eng.fed(parse_lie_expr(s, pres));
	};
	auto elements = [&](const std::string& csv) {
		std::vector<El> out;
		for (auto& s : split_exprs(csv)) out.push_back(element(s));
		return out;
	};

	json j;
	if (sub == "dims") {
		j["dims"] = eng.quotient_dims(maxdeg);
		j["assoc_dims"] = eng.assoc_quotient_dims(maxdeg);
	} else if (sub == "ideal") {
		auto comp = eng.ideal_component(degree, elements(gens_arg));
		j["degree"] = degree;
		j["dimension"] = comp.size();
	} else if (sub == "ann") {
		auto basis = eng.ann(elements(gens_arg), deg_t, deg_s);
		j["dimension"] = basis.size();
		j["degree"] = deg_s;
	} else if (sub == "mult") {
		El x = element(x_arg);
		El y = element(y_arg);
		El br = eng.bracket(x, y);
		j["degree"] = br.degree;
		j["zero"] = br.is_zero();
		json coords = json::array();
		for (auto& [i, c] : br.coords) {
			json e;
			e["modbas"] = {br.degree, (int)i + 1};
			std::ostringstream cs;
			if constexpr (std::is_same_v<F, Rat>)
				cs << c.get_str();
			else if constexpr (std::is_same_v<F, Rat64>)
				cs << c.num() << (c.den() == 1 ? "" : "/" + std::to_string(c.den()));
			else
				cs << c.value();
			e["coeff"] = cs.str();
			coords.push_back(e);
		}
		j["coords"] = coords;
	} else if (sub == "suba") {
		auto dims = eng.suba_dims(elements(gens_arg), maxdeg);
		j["dims"] = std::vector<int>(dims.begin() + 1, dims.end());
	}
	emit(j, as_json);
	return 0;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"computational workbench for semigroup rings, graded Lie superalgebras "
	             "and Poincare series"};
	app.require_subcommand(1);
	bool as_json = false;
	app.add_flag("--json", as_json, "JSON output");

	// semigroup
	auto* sg = app.add_subcommand("semigroup", "numerical semigroup arithmetic");
	sg->require_subcommand(1);
	std::string sg_gens;
	long sg_gbar = 0;
	auto* sg_info = sg->add_subcommand("info", "Frobenius data, gaps, symmetry");
	sg_info->add_option("--gens", sg_gens, "generators, comma separated")->required();
	auto* sg_sym = sg->add_subcommand("symmetrize", "symmetric semigroup for odd gbar");
	sg_sym->add_option("--gens", sg_gens)->required();
	sg_sym->add_option("--gbar", sg_gbar)->required();

	// presentation
	auto* pr = app.add_subcommand("presentation", "binomial relation lists");
	pr->require_subcommand(1);
	std::string pr_rels, pr_weights;
	long pr_maxdeg = 300;
	auto* pr_verify = pr->add_subcommand("verify", "kernel + graded quotient dimensions");
	pr_verify->add_option("--rels", pr_rels, "relation file")->required();
	pr_verify->add_option("--weights", pr_weights, "weights, comma separated")->required();
	pr_verify->add_option("--max-degree", pr_maxdeg);

	// grade
	auto* gr = app.add_subcommand("grade", "integral gradings of relation lists");
	gr->require_subcommand(1);
	std::string gr_rels, gr_free, gr_assign;
	auto* gr_solve = gr->add_subcommand("solve", "nullspace and minimal integral grading");
	gr_solve->add_option("--rels", gr_rels)->required();
	gr_solve->add_option("--free", gr_free, "free variables, e.g. b,d,h");
	auto* gr_spec = gr->add_subcommand("specialize", "evaluate the family at constants");
	gr_spec->add_option("--rels", gr_rels)->required();
	gr_spec->add_option("--assign", gr_assign, "c1=..,c2=..")->required();
	gr_spec->add_option("--free", gr_free);

	// series
	auto* se = app.add_subcommand("series", "exact truncated series transforms");
	se->require_subcommand(1);
	int se_nx = 12, se_ny = 24, se_n = 20;
	std::string se_num = "1", se_den = "1";
	auto* se_thm = se->add_subcommand("verify-theorem1", "assemble and verify the identity");
	se_thm->add_option("--max-x", se_nx);
	se_thm->add_option("--max-y", se_ny);
	auto* se_exp = se->add_subcommand("expand", "expand a rational function");
	se_exp->add_option("--num", se_num, "numerator coefficients");
	se_exp->add_option("--den", se_den, "denominator coefficients");
	se_exp->add_option("-N", se_n, "truncation order");

	// lie
	auto* li = app.add_subcommand("lie", "graded Lie superalgebra calculator");
	li->require_subcommand(1);
	std::string li_file, li_gens, li_x, li_y, li_field = "exact";
	int li_max = 7, li_degree = 7, li_t = 3, li_s = 3, li_lambda_max = 20;
	auto add_common = [&](CLI::App* c, bool need_file) {
		if (need_file) c->add_option("--file", li_file, "presentation file")->required();
		c->add_option("--field", li_field, "exact | zp");
	};
	auto* li_dims = li->add_subcommand("dims", "quotient and enveloping dimensions");
	add_common(li_dims, true);
	li_dims->add_option("--max", li_max);
	auto* li_ideal = li->add_subcommand("ideal", "ideal component dimension");
	add_common(li_ideal, true);
	li_ideal->add_option("--gens", li_gens, "generating elements")->required();
	li_ideal->add_option("--degree", li_degree)->required();
	auto* li_ann = li->add_subcommand("ann", "annihilator basis");
	add_common(li_ann, true);
	li_ann->add_option("--gens", li_gens)->required();
	li_ann->add_option("--deg-t", li_t, "degree of the given elements");
	li_ann->add_option("--deg-s", li_s, "degree of the annihilating space");
	auto* li_mult = li->add_subcommand("mult", "bracket of two elements");
	add_common(li_mult, true);
	li_mult->add_option("--x", li_x)->required();
	li_mult->add_option("--y", li_y)->required();
	auto* li_suba = li->add_subcommand("suba", "subalgebra dimensions");
	add_common(li_suba, true);
	li_suba->add_option("--gens", li_gens)->required();
	li_suba->add_option("--max", li_max);
	auto* li_lambda = li->add_subcommand("lambda", "radical cocycle coefficient table");
	li_lambda->add_option("--max", li_lambda_max);

	// monomial
	auto* mo = app.add_subcommand("monomial", "monomial algebra Hilbert series");
	mo->require_subcommand(1);
	std::string mo_alpha, mo_forbidden;
	int mo_n = 20;
	auto* mo_series = mo->add_subcommand("series", "forbidden-factor word counts");
	mo_series->add_option("--alphabet", mo_alpha)->required();
	mo_series->add_option("--forbidden", mo_forbidden)->required();
	mo_series->add_option("-N", mo_n);

	// verify-all
	auto* va = app.add_subcommand("verify-all", "run the complete verification pipeline");
	std::string va_config;
	bool va_parallel = false;
	long va_maxdeg = 0;
	va->add_option("--config", va_config, "key=value configuration file");
	va->add_option("--max-degree", va_maxdeg, "presentation degree bound override");
	va->add_flag("--parallel", va_parallel, "run independent sections concurrently");

	// let the global --json flag appear after any subcommand
	std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
		a->fallthrough(true);
		for (CLI::App* s : a->get_subcommands([](CLI::App*) { return true; }))
			enable_fallthrough(s);
	};
	enable_fallthrough(&app);

	CLI11_PARSE(app, argc, argv);

	try {
		if (sg_info->parsed()) {
			NumericalSemigroup s(parse_longs(sg_gens));
			GapData gd = s.gap_data();
			json j;
			j["generators"] = s.generators();
			j["frobenius"] = gd.frobenius;
			j["gaps"] = gd.gaps;
			j["pseudo_frobenius"] = gd.pseudo_frobenius;
			j["type"] = gd.type();
			j["symmetric"] = s.is_symmetric();
			emit(j, as_json);
		} else if (sg_sym->parsed()) {
			NumericalSemigroup s(parse_longs(sg_gens));
			NumericalSemigroup sb = symmetrize(s, sg_gbar);
			json j;
			j["gbar"] = sg_gbar;
			j["generators"] = sb.generators();
			j["symmetric"] = sb.is_symmetric();
			emit(j, as_json);
		} else if (pr_verify->parsed()) {
			auto rels = parse_relations(slurp(pr_rels));
			auto weights = parse_longs(pr_weights);
			auto ring = WeightedRing::consecutive('a', weights);
			KernelReport krep = verify_kernel(rels, ring);
			json j;
			j["relations"] = rels.size();
			j["kernel_ok"] = krep.ok;
			if (!krep.ok) j["kernel_failure"] = krep.failure;
			if (krep.ok) {
				NumericalSemigroup s(weights);
				PresentationReport prep = verify_presentation(rels, ring, s, pr_maxdeg);
				j["presentation_ok"] = prep.ok;
				j["max_degree"] = pr_maxdeg;
				if (!prep.ok) {
					j["first_mismatch_degree"] = prep.first_mismatch;
					j["got"] = prep.got;
					j["expected"] = prep.expected;
				}
			}
			emit(j, as_json);
			if (!krep.ok) return 1;
		} else if (gr_solve->parsed() || gr_spec->parsed()) {
			auto rels = parse_relations(slurp(gr_rels));
			auto sys = homogeneity_system(rels, collect_variables(rels));
			std::vector<char> free_vars;
			for (auto& s : split_csv(gr_free))
				if (!s.empty()) free_vars.push_back(s[0]);
			GradingSolution sol = solve_gradings(sys, free_vars);
			if (gr_solve->parsed()) {
				json j;
				j["equations"] = sys.rows.size();
				j["nullity"] = sol.nullity;
				std::string fv;
				for (char c : sol.free_vars) fv += c;
				j["free_variables"] = fv;
				j["parametrization"] = sol.parametrization();
				json basis = json::array();
				for (auto& v : sol.basis) {
					json row = json::array();
					for (auto& x : v) row.push_back(x.get_str());
					basis.push_back(row);
				}
				j["basis"] = basis;
				if (sol.minimal_integral) j["minimal_integral"] = *sol.minimal_integral;
				emit(j, as_json);
			} else {
				std::map<std::string, Rat> assign;
				for (auto& kv : split_csv(gr_assign)) {
					size_t eq = kv.find('=');
					if (eq == std::string::npos)
						throw std::runtime_error("bad assignment " + kv);
					assign[kv.substr(0, eq)] = Rat(std::stol(kv.substr(eq + 1)));
				}
				auto w = specialize(sol, assign);
				json j;
				j["weights"] = w;
				emit(j, as_json);
			}
		} else if (se_thm->parsed()) {
			UniSeries sbang = koszul_dual_series(std::max(se_nx + 2, 20));
			Theorem1Result t1 = assemble_theorem1(sbang, se_nx, se_ny);
			json j;
			j["P_S_xy"] = coeffs_json(t1.ps_xy);
			j["P_Rbar197_xy"] = coeffs_json(t1.prbar197_xy);
			j["P_R197_xy"] = coeffs_json(t1.pr197_xy);
			j["P_Rbar197_z"] = coeffs_json(t1.prbar197_z);
			j["P_R197_z"] = coeffs_json(t1.pr197_z);
			j["laurent_cancellation"] = t1.laurent_cancellation;
			j["two_routes_equal"] = t1.two_route_equal;
			j["y1_identity"] = t1.y1_identity;
			j["r197_factor"] = t1.r197_relation;
			j["nonnegative_integers"] = t1.nonneg_integers;
			emit(j, as_json);
			auto line = [](bool ok, const char* what) {
				std::cout << (ok ? "PASS" : "FAIL") << " " << what << "\n";
				return ok;
			};
			bool ok = true;
			ok &= line(t1.laurent_cancellation, "1/x terms cancel");
			ok &= line(t1.two_route_equal,
			           "closed formula equals the quotient-then-socle route");
			ok &= line(t1.y1_identity, "1/P(z) = (1-z)/P_S(z) - 4z - 4z^2 at y=1");
			ok &= line(t1.r197_relation, "P_R197(z) = (1+z) P_Rbar197(z)");
			ok &= line(t1.nonneg_integers, "all coefficients nonnegative integers");
			return ok ? 0 : 1;
		} else if (se_exp->parsed()) {
			std::vector<Int> num, den;
			for (long v : parse_longs(se_num)) num.push_back(Int(v));
			for (long v : parse_longs(se_den)) den.push_back(Int(v));
			UniSeries s = RationalFn(num, den).expand(se_n);
			json j;
			j["coefficients"] = coeffs_json(s);
			emit(j, as_json);
		} else if (li_lambda->parsed()) {
			LambdaTable tab(li_lambda_max);
			json j;
			j["max_sum"] = li_lambda_max;
			j["conditions_hold"] = tab.check_conditions();
			json rows = json::array();
			for (int m = 1; m < li_lambda_max; ++m) {
				json row = json::array();
				for (int n = 1; m + n <= li_lambda_max; ++n)
					row.push_back(tab(m, n).get_str());
				rows.push_back(row);
			}
			j["lambda"] = rows;
			emit(j, as_json);
		} else if (li->parsed()) {
			std::string sub = li->get_subcommands().front()->get_name();
			if (li_field == "zp")
				return lie_command<Fp>(sub, li_file, li_gens, li_x, li_y, li_max,
				                       li_degree, li_t, li_s, as_json);
			try {
				return lie_command<Rat64>(sub, li_file, li_gens, li_x, li_y, li_max,
				                          li_degree, li_t, li_s, as_json);
			} catch (const overflow_error&) {
				return lie_command<Rat>(sub, li_file, li_gens, li_x, li_y, li_max,
				                        li_degree, li_t, li_s, as_json);
			}
		} else if (mo_series->parsed()) {
			std::vector<char> alpha;
			for (auto& s : split_csv(mo_alpha)) alpha.push_back(s[0]);
			MonomialAlgebraSpec spec(alpha, split_csv(mo_forbidden));
			auto res = monomial_hilbert_series(spec, mo_n);
			json j;
			j["coefficients"] = coeffs_json(res.series);
			json num = json::array(), den = json::array();
			for (auto& x : res.rational.num) num.push_back(x.get_str());
			for (auto& x : res.rational.den) den.push_back(x.get_str());
			j["numerator"] = num;
			j["denominator"] = den;
			emit(j, as_json);
		} else if (va->parsed()) {
			PipelineConfig cfg;
			load_config(cfg, va_config);
			if (va_maxdeg > 0) cfg.presentation_max_degree = va_maxdeg;
			auto results = verify_all(cfg, va_parallel);
			if (as_json) {
				auto now = std::chrono::system_clock::now();
				auto tt = std::chrono::system_clock::to_time_t(now);
				char buf[64];
				std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&tt));
				std::cout << render_report_json(results, buf);
			} else {
				std::cout << render_report_text(results);
			}
			return all_passed(results) ? 0 : 1;
		}
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	return 0;
}
