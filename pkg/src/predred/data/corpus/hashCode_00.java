int f() { return result * prime; }
