#ifndef ROOTCOUNT_ROOTCOUNT_HPP
#define ROOTCOUNT_ROOTCOUNT_HPP

#include "rootcount/budan_fourier.hpp"
#include "rootcount/complex_count.hpp"
#include "rootcount/errors.hpp"
#include "rootcount/ext_real.hpp"
#include "rootcount/oracle.hpp"
#include "rootcount/poly.hpp"
#include "rootcount/rat.hpp"
#include "rootcount/sign_var.hpp"
#include "rootcount/sturm.hpp"

#endif
