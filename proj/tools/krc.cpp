#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <krc/krc.hpp>

namespace {

using namespace krc;

struct Common {
    std::string type = "D,4,1";
    int r = 1;
    int s = 1;
    std::size_t budget = kDefaultVertexBudget;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("-t,--type", c.type, "affine Cartan type as letter,index,twist (D,4,1 / B,3,1 / A,5,2)");
    sub->add_option("-r", c.r, "KR index r");
    sub->add_option("-s", c.s, "KR index s");
    sub->add_option("--budget", c.budget, "vertex budget for crystal enumeration");
}

CartanType checked_type(const Common& c) {
    const CartanType t = parse_cartan(c.type);
    validate_kr_index(c.r, t);
    if (c.s < 1) throw DomainError("s must be positive");
    return t;
}

void print_element(const std::optional<Element>& b) {
    std::cout << (b ? element_to_json(*b).dump() : std::string("null")) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kirillov-Reshetikhin crystals of type D_n^(1), B_n^(1), A_{2n-1}^(2)"};
    app.require_subcommand(1);
    Common c;
    std::string elem, diagram, small_p, weight, dot_file;
    std::optional<int> e_node, f_node;
    bool list = false, perfect = false, properties = false;

    auto* build = app.add_subcommand("build", "enumerate B^{r,s} and print a summary");
    add_common(build, c);
    build->add_option("--dot", dot_file, "also write the crystal graph as DOT");

    auto* op = app.add_subcommand("op", "apply e_i or f_i (i = 0..n) to an element");
    add_common(op, c);
    op->add_option("--elem", elem, "element as JSON rows, top to bottom")->required();
    auto* eo = op->add_option("--e", e_node, "raising operator index");
    auto* fo = op->add_option("--f", f_node, "lowering operator index");
    eo->excludes(fo);

    auto* sig = app.add_subcommand("sigma", "apply the automorphism sigma");
    add_common(sig, c);
    sig->add_option("--elem", elem, "element as JSON rows")->required();

    auto* ph = app.add_subcommand("phi", "map a +- diagram to its X_{n-1} highest element");
    add_common(ph, c);
    ph->add_option("--diagram", diagram, "diagram as JSON rows of \"+\", \"-\", \"\"")->required();

    auto* phs = app.add_subcommand("phi-string", "lowering string taking the highest element to phi(P)");
    add_common(phs, c);
    phs->add_option("--diagram", diagram, "diagram as JSON rows")->required();

    auto* sinv = app.add_subcommand("s-involution", "apply the diagram involution");
    add_common(sinv, c);
    sinv->add_option("--diagram", diagram, "diagram as JSON rows")->required();

    auto* ps = app.add_subcommand("psi", "element attached to a pair of diagrams");
    add_common(ps, c);
    ps->add_option("--P", diagram, "outer diagram as JSON rows")->required();
    ps->add_option("--p", small_p, "inner diagram as JSON rows")->required();

    auto* po = app.add_subcommand("pair-of", "pair of diagrams of an X_{n-2} highest element");
    add_common(po, c);
    po->add_option("--elem", elem, "element as JSON rows")->required();

    auto* mn = app.add_subcommand("minimal", "minimal elements");
    add_common(mn, c);
    auto* wo = mn->add_option("--weight", weight, "l0,l1,...,ln of level s");
    auto* lo = mn->add_flag("--list", list, "list B_min by exhaustive scan");
    wo->excludes(lo);

    auto* ver = app.add_subcommand("verify", "run the verifiers and print a JSON report");
    add_common(ver, c);
    ver->add_flag("--perfect", perfect, "perfectness conditions");
    ver->add_flag("--properties", properties, "defining properties of the KR crystal");

    auto* gr = app.add_subcommand("graph", "write the crystal graph as DOT");
    add_common(gr, c);
    gr->add_option("--dot", dot_file, "output file ('-' for stdout)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        const CartanType t = checked_type(c);
        const int n = t.rank;

        if (*build) {
            KRCrystal B(t, c.r, c.s, c.budget);
            json comps = json::array();
            for (const auto& sh : B.shapes()) comps.push_back(sh.heights);
            std::cout << json{{"cartan", cartan_to_json(t)}, {"r", c.r}, {"s", c.s}, {"size", B.size()}, {"components", comps}}.dump()
                      << "\n";
            if (!dot_file.empty()) std::ofstream(dot_file) << to_dot(B);
        } else if (*op) {
            if (!e_node && !f_node) throw DomainError("op needs --e or --f");
            const int i = e_node ? *e_node : *f_node;
            if (i < 0 || i > n) throw DomainError("node out of range");
            const Element b = decode_kr_element(parse_json(elem), c.r, c.s, t);
            print_element(affine_step(i, b, e_node ? Step::raise : Step::lower, c.r, t));
        } else if (*sig) {
            print_element(sigma(decode_kr_element(parse_json(elem), c.r, c.s, t), c.r, t));
        } else if (*ph) {
            print_element(phi(diagram_from_json(parse_json(diagram), c.s)));
        } else if (*phs) {
            std::cout << json(diagrams_string(diagram_from_json(parse_json(diagram), c.s), t.family, n)).dump() << "\n";
        } else if (*sinv) {
            std::cout << diagram_to_json(s_involution(diagram_from_json(parse_json(diagram), c.s), c.r)).dump() << "\n";
        } else if (*ps) {
            const PMDiagram P = diagram_from_json(parse_json(diagram), c.s);
            const PMDiagram p = diagram_from_json(parse_json(small_p), c.s);
            print_element(psi({P, p}, t));
        } else if (*po) {
            const auto pr = pair_of(decode_kr_element(parse_json(elem), c.r, c.s, t), t);
            std::cout << json{{"P", diagram_to_json(pr.P)}, {"p", diagram_to_json(pr.p)}}.dump() << "\n";
        } else if (*mn) {
            if (list) {
                KRCrystal B(t, c.r, c.s, c.budget);
                for (const auto& [w, v] : minimal_set(B))
                    std::cout << json{{"epsilon", weight_to_json(w)}, {"element", element_to_json(B.element(v))}}.dump() << "\n";
            } else {
                if (weight.empty()) throw DomainError("minimal needs --weight or --list");
                const AffineWeight La = parse_affine_weight(weight, t);
                if (level(La, t) != c.s) throw DomainError("weight level differs from s");
                print_element(minimal_element(La, c.r, t));
            }
        } else if (*ver) {
            if (!perfect && !properties) throw DomainError("verify needs --perfect and/or --properties");
            KRCrystal B(t, c.r, c.s, c.budget);
            json out;
            bool ok = true;
            if (perfect) {
                const auto rep = check_perfect(B);
                out["perfect"] = report_to_json(rep);
                ok = ok && rep.ok();
            }
            if (properties) {
                const auto rep = check_property_AKR(B);
                out["properties"] = report_to_json(rep);
                ok = ok && rep.ok();
            }
            std::cout << out.dump(2) << "\n";
            return ok ? 0 : 3;
        } else if (*gr) {
            KRCrystal B(t, c.r, c.s, c.budget);
            if (dot_file == "-") std::cout << to_dot(B);
            else std::ofstream(dot_file) << to_dot(B);
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
