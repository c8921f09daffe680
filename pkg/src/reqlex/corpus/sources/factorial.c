#include<stdio.h>
#include<conio.h>
int factorial(int);
void main()
{
    int n, fact;
    clrscr();
    printf("\n\t\t Program to calculate the factorial of a number:");
    printf("\n\n\t\t Enter number to calculate the factorial:");
    scanf("%d",&n);
    fact =factorial(n);
    printf("Factorial of %d = %d",n,fact);
    getch();
}
int factorial( int n )
{
    if ( n == 0 )
        return 1;
    else
        return n* factorial(n-1);
}
