#pragma once

#include <iosfwd>
#include <vector>

namespace sdpcolor::params {

inline constexpr double kDefaultC = 0.0393241;
inline constexpr double kDefaultCPrime = 0.0258187;

double eta_integrand(double alpha, double c);
double lambda_integrand(double beta, double gamma, double c, double c_prime, double eta0);

struct Infimum1 {
    double value;
    double argmin;
};
struct Infimum2 {
    double value;
    double beta;
    double gamma;
};

Infimum1 eta0(double c, int grid = 10000);
Infimum2 lambda0(double c, double c_prime, int grid = 300);

struct ParamPoint {
    double c = 0, c_prime = 0;
    double eta0 = 0, lambda0 = 0;
    double f_delta = 0, g_delta = 0;  // exponents of the max degree
    double f_n = 0, g_n = 0;          // exponents of n
    double n_exponent = 0;            // min(f_n, g_n)
    double coloring_exponent = 0;
    double target = 0;                // (4+3c)/(5+3c)
    double margin() const { return n_exponent - target; }
};

double degree_to_n(double c);  // (3+3c)/(5+3c)
double coloring_exponent(double c);
double progress_target(double c);

ParamPoint exponents(double c, double c_prime, int eta_grid = 10000, int lambda_grid = 300);

struct OptimizeResult {
    ParamPoint best;              // largest feasible c on the grid, with its best c'
    std::vector<ParamPoint> per_c;  // best c' for every grid c
    double refined_c = 0;         // continuous refinement between grid neighbours
    double refined_c_prime = 0;
};

OptimizeResult optimize(const std::vector<double>& c_grid, const std::vector<double>& c_prime_grid,
                        int lambda_grid = 60);

std::vector<double> linspace(double lo, double hi, int count);

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const ParamPoint& p);

}  // namespace sdpcolor::params
