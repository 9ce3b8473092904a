public static void f(String[] args) { }
