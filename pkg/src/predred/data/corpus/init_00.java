void f() throws ServletException { }
