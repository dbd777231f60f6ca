// Command-line surface over the engine: scheme combinatorics, element
// arithmetic in U_q(so_{2n+1}), generator construction, root sequences, and
// the verification suites. Elements are given either as JSON or in a small
// shorthand grammar:
//
//   x1, x2-           letters (trailing '-' = negative letter)
//   g1, f2, h1, g1-   group generators (trailing '-' = inverse), h_i = g_i f_i
//   u 1 3             interval word u[1,3]; u- 1 3 for the negative version
//   phi 1 3 {1,2}     coideal generator Phi^S(1,3); phi- for the negative one
//   3/2, a * b, a + b, a - b, (a), [a, b]   scalars, products, sums, brackets

#include <CLI11.hpp>

#include <iostream>

#include "qbn/generators.hpp"
#include "qbn/io.hpp"
#include "qbn/verify.hpp"

using namespace qbn;

namespace {

// ---------------------------------------------------------------------------
// shorthand expression parser
// ---------------------------------------------------------------------------

struct Token {
    enum Kind { ident, number, lparen, rparen, lbrack, rbrack, lbrace, rbrace, comma, star, plus, minus, end };
    Kind kind = end;
    std::string text;
};

class Lexer {
  public:
    explicit Lexer(std::string s) : s_(std::move(s)) { advance(); }
    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ >= s_.size()) {
            tok_ = {Token::end, ""};
            return;
        }
        char c = s_[i_];
        auto one = [&](Token::Kind k) {
            tok_ = {k, std::string(1, c)};
            ++i_;
        };
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() && std::isalpha(static_cast<unsigned char>(s_[j]))) ++j;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            if (j < s_.size() && s_[j] == '-' && (j + 1 >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[j + 1]))))
                ++j;  // attached minus marks the negative version
            tok_ = {Token::ident, s_.substr(i_, j - i_)};
            i_ = j;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[j])) || s_[j] == '/')) ++j;
            tok_ = {Token::number, s_.substr(i_, j - i_)};
            i_ = j;
            return;
        }
        switch (c) {
            case '(': one(Token::lparen); return;
            case ')': one(Token::rparen); return;
            case '[': one(Token::lbrack); return;
            case ']': one(Token::rbrack); return;
            case '{': one(Token::lbrace); return;
            case '}': one(Token::rbrace); return;
            case ',': one(Token::comma); return;
            case '*': one(Token::star); return;
            case '+': one(Token::plus); return;
            case '-': one(Token::minus); return;
            default: throw std::invalid_argument(std::string("unexpected character '") + c + "'");
        }
    }

    std::string s_;
    size_t i_ = 0;
    Token tok_;
};

class ExprParser {
  public:
    ExprParser(const ParamSpec& sp, const Generators& gen, std::string text)
        : sp_(sp), gen_(gen), lex_(std::move(text)) {}

    Element parse() {
        Element e = expr();
        if (lex_.peek().kind != Token::end) throw std::invalid_argument("trailing input in expression");
        return e;
    }

  private:
    Element expr() {
        bool negate = false;
        if (lex_.peek().kind == Token::minus) {
            lex_.take();
            negate = true;
        }
        Element acc = product();
        if (negate) acc = -acc;
        while (lex_.peek().kind == Token::plus || lex_.peek().kind == Token::minus) {
            bool minus = lex_.take().kind == Token::minus;
            Element rhs = product();
            if (minus)
                acc -= rhs;
            else
                acc += rhs;
        }
        return acc;
    }

    Element product() {
        Element acc = factor();
        while (lex_.peek().kind == Token::star) {
            lex_.take();
            acc = multiply(sp_, acc, factor());
        }
        return acc;
    }

    int expect_int() {
        if (lex_.peek().kind != Token::number) throw std::invalid_argument("expected an integer");
        return std::stoi(lex_.take().text);
    }

    Element factor() {
        const Token& t = lex_.peek();
        const int n = sp_.rank();
        switch (t.kind) {
            case Token::number:
                return scalar_parse(lex_.take().text) * Element::unit(n);
            case Token::lparen: {
                lex_.take();
                Element e = expr();
                if (lex_.take().kind != Token::rparen) throw std::invalid_argument("expected ')'");
                return e;
            }
            case Token::lbrack: {
                lex_.take();
                Element a = expr();
                if (lex_.take().kind != Token::comma) throw std::invalid_argument("expected ',' in bracket");
                Element b = expr();
                if (lex_.take().kind != Token::rbrack) throw std::invalid_argument("expected ']'");
                return bracket(sp_, a, b);
            }
            case Token::ident: {
                std::string name = lex_.take().text;
                bool minus = !name.empty() && name.back() == '-';
                if (minus) name.pop_back();
                size_t d = 0;
                while (d < name.size() && std::isalpha(static_cast<unsigned char>(name[d]))) ++d;
                std::string head = name.substr(0, d);
                std::optional<int> idx;
                if (d < name.size()) idx = std::stoi(name.substr(d));
                if (head == "x") {
                    if (!idx) throw std::invalid_argument("letter needs an index, e.g. x1");
                    return Element::letter(n, *idx, minus ? -1 : +1);
                }
                if (head == "g" || head == "f" || head == "h") {
                    if (!idx) throw std::invalid_argument("group generator needs an index");
                    GroupElement h = head == "g"   ? GroupElement::g_i(n, *idx)
                                     : head == "f" ? GroupElement::f_i(n, *idx)
                                                   : GroupElement::h_i(n, *idx);
                    return Element::group(minus ? h.inverse() : h);
                }
                if (head == "u") {
                    int k = idx ? *idx : expect_int();
                    int m = expect_int();
                    return gen_.u(k, m, minus ? -1 : +1);
                }
                if (head == "phi") {
                    int k = idx ? *idx : expect_int();
                    int m = expect_int();
                    std::set<int> S;
                    if (lex_.peek().kind == Token::lbrace) {
                        lex_.take();
                        while (lex_.peek().kind == Token::number) {
                            S.insert(expect_int());
                            if (lex_.peek().kind == Token::comma) lex_.take();
                        }
                        if (lex_.take().kind != Token::rbrace) throw std::invalid_argument("expected '}'");
                    }
                    return gen_.phi(k, m, S, minus ? -1 : +1);
                }
                throw std::invalid_argument("unknown name '" + head + "'");
            }
            default:
                throw std::invalid_argument("unexpected token in expression");
        }
    }

    const ParamSpec& sp_;
    const Generators& gen_;
    Lexer lex_;
};

// ---------------------------------------------------------------------------

struct Globals {
    int n = 2;
    std::string q = "2";
    std::uint64_t seed = 1;
    std::string params;  // full spec as JSON
    int max_degree = 12;
    bool json_out = false;

    ParamSpec spec() const {
        if (!params.empty()) return spec_from_json(json::parse(params));
        return ParamSpec::make(n, scalar_parse(q), {}, seed);
    }
};

Element parse_element(const ParamSpec& sp, const Generators& gen, const std::string& text) {
    std::string trimmed = text;
    size_t b = trimmed.find_first_not_of(" \t");
    if (b != std::string::npos && (trimmed[b] == '{' ||
                                   (trimmed[b] == '[' && trimmed.find("coeff") != std::string::npos)))
        return element_from_json(sp.rank(), json::parse(trimmed));
    return ExprParser(sp, gen, text).parse();
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    return out;
}

Scheme parse_scheme(int n, const std::string& text, int sign) {
    auto parts = parse_int_list(text);
    if (parts.size() < 2) throw std::invalid_argument("scheme needs at least k,m");
    std::set<int> S(parts.begin() + 2, parts.end());
    return Scheme(n, parts[0], parts[1], S, sign);
}

void emit(const Globals& g, const json& j, const std::string& text) {
    if (g.json_out)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic engine for the multiparameter quantum group U_q(so_{2n+1})"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--n", g.n, "rank");
    app.add_option("--q", g.q, "parameter q as a rational, e.g. 2 or 5/3");
    app.add_option("--seed", g.seed, "seed for the free p-entries");
    app.add_option("--params", g.params, "full parameter spec as JSON {n,q,p}");
    app.add_option("--max-degree", g.max_degree, "total degree budget for quotient reduction");
    app.add_flag("--json", g.json_out, "JSON output");

    // ---- schemes ----
    auto* schemes = app.add_subcommand("schemes", "black/white scheme combinatorics");
    schemes->require_subcommand(1);
    schemes->fallthrough();

    int sk = 1, sm = 1;
    std::string sset, sstyle = "flat", scolor;
    std::string pos_arg, neg_arg;

    auto* sregular = schemes->add_subcommand("regular", "list regular sets for (k,m)");
    sregular->add_option("--k", sk)->required();
    sregular->add_option("--m", sm)->required();
    sregular->add_option("--color", scolor, "white|black (default: either)");

    auto* srender = schemes->add_subcommand("render", "ASCII diagram of a scheme");
    srender->add_option("--k", sk)->required();
    srender->add_option("--m", sm)->required();
    srender->add_option("--set", sset, "comma list of black interior points");
    srender->add_option("--style", sstyle, "flat|two_line|shifted");

    auto* spair = schemes->add_subcommand("pair-check", "necessary-condition verdict for a pair");
    spair->add_option("--pos", pos_arg, "k,m,s1,s2,...")->required();
    spair->add_option("--neg", neg_arg, "i,j,t1,t2,...")->required();

    auto* sdual = schemes->add_subcommand("dual", "complement scheme");
    sdual->add_option("--k", sk)->required();
    sdual->add_option("--m", sm)->required();
    sdual->add_option("--set", sset);

    auto* sstar = schemes->add_subcommand("star", "star-transformed scheme");
    sstar->add_option("--k", sk)->required();
    sstar->add_option("--m", sm)->required();
    sstar->add_option("--set", sset);

    // ---- alg ----
    auto* alg = app.add_subcommand("alg", "element arithmetic");
    alg->require_subcommand(1);
    alg->fallthrough();
    std::string ea, eb;
    int di = 1;
    std::string dvariant = "d";
    auto add_two = [&](CLI::App* c) {
        c->add_option("a", ea, "first element (shorthand or JSON)")->required();
        c->add_option("b", eb, "second element")->required();
        c->fallthrough();
    };
    auto add_one = [&](CLI::App* c) {
        c->add_option("a", ea, "element (shorthand or JSON)")->required();
        c->fallthrough();
    };
    auto* abracket = alg->add_subcommand("bracket", "skew commutator [a,b]");
    add_two(abracket);
    auto* amul = alg->add_subcommand("mul", "product a*b");
    add_two(amul);
    auto* anf = alg->add_subcommand("nf", "normal form in the Serre quotient");
    add_one(anf);
    auto* acop = alg->add_subcommand("coproduct", "Delta(a)");
    add_one(acop);
    auto* aant = alg->add_subcommand("antipode", "sigma(a)");
    add_one(aant);
    auto* ader = alg->add_subcommand("derive", "partial derivative");
    add_one(ader);
    ader->add_option("--i", di, "letter index")->required();
    ader->add_option("--variant", dvariant, "d|dstar|dneg|dnegstar");

    // ---- gen ----
    auto* genc = app.add_subcommand("gen", "distinguished generators and tables");
    genc->require_subcommand(1);
    genc->fallthrough();
    int gk = 1, gm = 1;
    bool gneg = false;
    std::string gset, gkind = "sigma";
    auto* genu = genc->add_subcommand("u", "interval word u[k,m]");
    genu->add_option("--k", gk)->required();
    genu->add_option("--m", gm)->required();
    genu->add_flag("--neg", gneg, "negative Borel version");
    auto* genphi = genc->add_subcommand("phi", "coideal generator Phi^S(k,m)");
    genphi->add_option("--k", gk)->required();
    genphi->add_option("--m", gm)->required();
    genphi->add_option("--set", gset, "comma list S");
    genphi->add_flag("--neg", gneg);
    auto* gentab = genc->add_subcommand("tables", "sigma/mu coefficient tables");
    gentab->add_option("--kind", gkind, "sigma|mu");

    // ---- roots ----
    auto* roots = app.add_subcommand("roots", "root sequences and Sigma-monoid queries");
    roots->require_subcommand(1);
    roots->fallthrough();
    int rk = 1, rm = 1;
    std::string rset, rmember;
    auto* rcount = roots->add_subcommand("count", "number of root sequences");
    rcount->fallthrough();
    auto* rlist = roots->add_subcommand("list", "enumerate root sequences");
    rlist->fallthrough();
    auto* rsigma = roots->add_subcommand("sigma", "Sigma-monoid of a scheme");
    rsigma->add_option("--k", rk)->required();
    rsigma->add_option("--m", rm)->required();
    rsigma->add_option("--set", rset);
    rsigma->add_option("--member", rmember, "folded degree vector to test, comma list");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string vsuite = "all";
    long vtrials = 500;
    int vjobs = 1, vspecial = 3;
    verify->add_option("--suite", vsuite, "suite name or 'all'");
    verify->add_option("--trials", vtrials, "random trials per specialization");
    verify->add_option("--jobs", vjobs, "worker threads");
    verify->add_option("--specializations", vspecial, "number of parameter specializations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // exit 2 on usage errors, 0 for --help
    }

    try {
        if (sregular->parsed()) {
            ParamSpec sp = g.spec();
            int n = sp.rank();
            json out = json::array();
            std::string text;
            std::vector<int> base;
            for (int e = sk; e < sm; ++e) base.push_back(e);
            for (std::uint64_t mask = 0; mask < (1ull << base.size()); ++mask) {
                std::set<int> S;
                for (size_t b = 0; b < base.size(); ++b)
                    if (mask & (1ull << b)) S.insert(base[b]);
                bool w = is_regular(n, sk, sm, S, Color::white);
                bool bl = is_regular(n, sk, sm, S, Color::black);
                bool want = scolor == "white" ? w : scolor == "black" ? bl : (w || bl);
                if (!want) continue;
                json row = scheme_to_json(Scheme(n, sk, sm, S));
                row["white_regular"] = w;
                row["black_regular"] = bl;
                out.push_back(row);
                text += "{";
                bool first = true;
                for (int e : S) {
                    text += (first ? "" : ",") + std::to_string(e);
                    first = false;
                }
                text += w && bl ? "} white+black\n" : (w ? "} white\n" : "} black\n");
            }
            if (text.empty()) text = "(none)";
            emit(g, out, text);
        } else if (srender->parsed()) {
            ParamSpec sp = g.spec();
            std::set<int> S;
            for (int e : parse_int_list(sset)) S.insert(e);
            Scheme sch(sp.rank(), sk, sm, S);
            RenderStyle style = sstyle == "two_line"  ? RenderStyle::two_line
                                : sstyle == "shifted" ? RenderStyle::shifted
                                                      : RenderStyle::flat;
            std::string text = render(sch, style);
            json out = scheme_to_json(sch);
            out["rendering"] = text;
            emit(g, out, text);
        } else if (spair->parsed()) {
            ParamSpec sp = g.spec();
            Scheme pos = parse_scheme(sp.rank(), pos_arg, +1);
            Scheme neg = parse_scheme(sp.rank(), neg_arg, -1);
            BaleVerdict v = bale_check(pos, neg);
            json out = bale_to_json(pos, neg, v);
            std::string text = v.passes
                                   ? (v.all_balanced ? "passes: all four overlays balanced"
                                                     : std::string("passes: gra3 form on ") +
                                                           variant_name(*v.gra3_witness))
                                   : "fails the necessary condition";
            emit(g, out, text);
        } else if (sdual->parsed() || sstar->parsed()) {
            ParamSpec sp = g.spec();
            std::set<int> S;
            for (int e : parse_int_list(sset)) S.insert(e);
            Scheme sch(sp.rank(), sk, sm, S);
            Scheme out_s = sdual->parsed() ? complement_dual(sch) : star(sch);
            emit(g, scheme_to_json(out_s), render(out_s, RenderStyle::flat));
        } else if (alg->parsed()) {
            ParamSpec sp = g.spec();
            Generators gen(sp);
            BorelContext bc(sp, g.max_degree);
            Element a = parse_element(sp, gen, ea);
            if (abracket->parsed() || amul->parsed()) {
                Element b = parse_element(sp, gen, eb);
                Element r = abracket->parsed() ? bracket(sp, a, b) : multiply(sp, a, b);
                emit(g, element_to_json(r), element_to_text(r));
            } else if (anf->parsed()) {
                Element r = bc.reduce(a);
                emit(g, element_to_json(r), element_to_text(r));
            } else if (acop->parsed()) {
                TensorElement r = coproduct(sp, a);
                std::string text;
                for (const auto& [kpair, c] : r.terms())
                    text += "(" + scalar_str(c) + ") " +
                            element_to_text(Element::from_term(kpair.first, 1)) + "  (x)  " +
                            element_to_text(Element::from_term(kpair.second, 1)) + "\n";
                emit(g, tensor_to_json(r), text.empty() ? "0" : text);
            } else if (aant->parsed()) {
                Element r = antipode(sp, a);
                emit(g, element_to_json(r), element_to_text(r));
            } else if (ader->parsed()) {
                DerivVariant v = dvariant == "dstar"      ? DerivVariant::d_star
                                 : dvariant == "dneg"     ? DerivVariant::d_neg
                                 : dvariant == "dnegstar" ? DerivVariant::d_neg_star
                                                          : DerivVariant::d;
                Element r = bc.derive(a, di, v);
                emit(g, element_to_json(r), element_to_text(r));
            }
        } else if (genu->parsed() || genphi->parsed()) {
            ParamSpec sp = g.spec();
            Generators gen(sp);
            Element r;
            if (genu->parsed()) {
                r = gen.u(gk, gm, gneg ? -1 : +1);
            } else {
                std::set<int> S;
                for (int e : parse_int_list(gset)) S.insert(e);
                r = gen.phi(gk, gm, S, gneg ? -1 : +1);
            }
            emit(g, element_to_json(r), element_to_text(r));
        } else if (gentab->parsed()) {
            ParamSpec sp = g.spec();
            Generators gen(sp);
            json out = json::array();
            std::string text;
            for (int k = 1; k <= 2 * sp.rank(); ++k)
                for (int m = k; m <= 2 * sp.rank(); ++m) {
                    if (gkind == "sigma") {
                        Scalar v = gen.sigma_closed(k, m);
                        out.push_back(json{{"k", k}, {"m", m}, {"value", scalar_str(v)}});
                        text += "sigma_" + std::to_string(k) + "^" + std::to_string(m) + " = " +
                                scalar_str(v) + "\n";
                    } else {
                        for (int i = k; i < m; ++i) {
                            Scalar v = gen.mu_closed(k, m, i);
                            out.push_back(json{{"k", k}, {"m", m}, {"i", i}, {"value", scalar_str(v)}});
                            text += "mu_" + std::to_string(k) + "^{" + std::to_string(m) + "," +
                                    std::to_string(i) + "} = " + scalar_str(v) + "\n";
                        }
                    }
                }
            emit(g, out, text);
        } else if (rcount->parsed()) {
            emit(g, json{{"n", g.n}, {"count", count_root_sequences(g.n)}},
                 std::to_string(count_root_sequences(g.n)));
        } else if (rlist->parsed()) {
            json out = json::array();
            std::string text;
            enumerate_root_sequences(g.n, [&](const std::vector<int>& theta) {
                out.push_back(theta);
                for (size_t i = 0; i < theta.size(); ++i)
                    text += (i ? "," : "") + std::to_string(theta[i]);
                text += "\n";
            });
            emit(g, out, text);
        } else if (rsigma->parsed()) {
            ParamSpec sp = g.spec();
            std::set<int> S;
            for (int e : parse_int_list(rset)) S.insert(e);
            Scheme sch(sp.rank(), rk, rm, S);
            SigmaMonoid mon = sigma_generators(sch);
            json out;
            out["generators"] = json::array();
            std::string text = "generators:";
            for (const auto& gvec : mon.generators()) {
                out["generators"].push_back(gvec);
                text += " (";
                for (size_t i = 0; i < gvec.size(); ++i) text += (i ? "," : "") + std::to_string(gvec[i]);
                text += ")";
            }
            if (!rmember.empty()) {
                auto gamma = parse_int_list(rmember);
                bool member = mon.member(gamma);
                out["member"] = member;
                out["indecomposable"] = member && mon.indecomposable(gamma);
                text += member ? "\nmember" : "\nnot a member";
            }
            emit(g, out, text);
        } else if (verify->parsed()) {
            SuiteOptions opt;
            opt.n = g.n;
            opt.seed = g.seed;
            opt.trials = vtrials;
            opt.jobs = vjobs;
            opt.max_degree = g.max_degree;
            opt.specializations = vspecial;
            if (!g.params.empty()) opt.spec = g.spec();
            std::vector<std::string> names =
                vsuite == "all" ? suite_names() : std::vector<std::string>{vsuite};
            json out = json::array();
            bool all_pass = true;
            for (const auto& name : names) {
                SuiteReport rep = run_suite(name, opt);
                all_pass = all_pass && rep.pass();
                out.push_back(report_to_json(rep));
                if (!g.json_out)
                    std::cout << (rep.pass() ? "[PASS] " : "[FAIL] ") << name << "  cases=" << rep.cases
                              << " skipped=" << rep.skipped << " failures=" << rep.failures.size()
                              << "  (" << rep.wall_ms << " ms)\n";
            }
            if (g.json_out) std::cout << out.dump(2) << "\n";
            return all_pass ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
